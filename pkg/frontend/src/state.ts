// Playground orchestration, framework-free so the loop is testable:
// slider edits debounce into at most one in-flight rollout request,
// stale responses are discarded, and the rendered curves always come
// from the exact bytes of the freshest service response.

import { TrajectoryResponse } from "./api.js";
import { debounce, Debounced } from "./debounce.js";
import { latestWins, LatestWins } from "./requests.js";
import { ModulationConfig, configBody, neutralConfig } from "./config.js";

export interface RolloutPort {
  rollout(
    modelId: string,
    body: string,
    opts: { robot?: string; settle?: number },
  ): Promise<TrajectoryResponse>;
}

export interface ControllerOptions {
  debounceMs?: number;
  settle?: number;
  onRender: (c: PlaygroundController) => void;
  onError?: (err: unknown) => void;
}

export class PlaygroundController {
  config: ModulationConfig = neutralConfig();
  modelId: string | null = null;
  robot: string | null = null;
  baseline: TrajectoryResponse | null = null;
  latest: TrajectoryResponse | null = null;

  private schedule: Debounced<[]>;
  private channel: LatestWins<TrajectoryResponse>;

  constructor(
    private port: RolloutPort,
    private options: ControllerOptions,
  ) {
    this.channel = latestWins<TrajectoryResponse>((resp) => {
      this.latest = resp;
      this.options.onRender(this);
    });
    this.schedule = debounce(() => {
      void this.requestRollout();
    }, options.debounceMs ?? 50);
  }

  /** Select a model: fetch the neutral baseline, then mirror it as current. */
  async setModel(modelId: string): Promise<void> {
    this.modelId = modelId;
    this.config = neutralConfig();
    this.baseline = await this.port.rollout(modelId, configBody(neutralConfig()), {
      robot: this.robot ?? undefined,
      settle: this.options.settle,
    });
    this.latest = this.baseline;
    this.options.onRender(this);
  }

  setRobot(robot: string | null): void {
    this.robot = robot;
  }

  /** Apply a config edit; the rollout fires once the debounce settles. */
  update(edit: Partial<ModulationConfig>): void {
    this.config = { ...this.config, ...edit };
    this.schedule();
  }

  /** Replace the whole config (phase selector, coupling pickers). */
  replaceConfig(config: ModulationConfig): void {
    this.config = config;
    this.schedule();
  }

  flush(): void {
    this.schedule.flush();
  }

  private async requestRollout(): Promise<void> {
    if (!this.modelId) return;
    const body = configBody(this.config);
    try {
      await this.channel.issue(() =>
        this.port.rollout(this.modelId as string, body, {
          robot: this.robot ?? undefined,
          settle: this.options.settle,
        }),
      );
    } catch (err) {
      this.options.onError?.(err);
    }
  }
}
