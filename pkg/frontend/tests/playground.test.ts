// Acceptance-level checks for the interactive loop: debounced single
// request per scrub, rendered bytes equal to the service response, and
// the neutral-slider rendering overlaying the baseline exactly.

import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { TrajectoryResponse } from "../src/api.js";
import { renderChart, Series } from "../src/chart.js";
import { neutralConfig } from "../src/config.js";
import { PlaygroundController } from "../src/state.js";

function trajectoryBytes(scale: number): string {
  // Service-shaped JSON; the scale lets distinct configs yield distinct bytes.
  const n = 12;
  const positions = Array.from({ length: n }, (_, i) => [scale * Math.sin(i / 3)]);
  return JSON.stringify({
    format_version: 1,
    kind: "trajectory",
    dt: 0.01,
    positions,
    velocities: positions,
    accelerations: positions,
    phase: Array.from({ length: n }, (_, i) => 1 - i / (n - 1)),
  });
}

class FakePort {
  calls: string[] = [];
  delayed: Array<() => void> = [];
  holdResponses = false;

  async rollout(_modelId: string, body: string): Promise<TrajectoryResponse> {
    this.calls.push(body);
    const config = JSON.parse(body);
    const raw = trajectoryBytes(config.p_exa ?? 1);
    if (this.holdResponses) {
      await new Promise<void>((resolve) => this.delayed.push(resolve));
    }
    return { raw, trajectory: JSON.parse(raw) };
  }

  releaseAll(): void {
    for (const release of this.delayed.splice(0)) release();
  }
}

function makeController(port: FakePort) {
  const renders: string[] = [];
  const controller = new PlaygroundController(port, {
    debounceMs: 50,
    onRender: (c) => renders.push(c.latest?.raw ?? ""),
  });
  return { controller, renders };
}

describe("playground loop", () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  it("a slider scrub issues exactly one rollout request after the debounce", async () => {
    const port = new FakePort();
    const { controller } = makeController(port);
    await controller.setModel("m1");
    expect(port.calls.length).toBe(1); // the baseline fetch

    for (let i = 0; i <= 20; i++) {
      controller.update({ p_exa: 1 + i / 40 }); // rapid scrub
      await vi.advanceTimersByTimeAsync(10);
    }
    expect(port.calls.length).toBe(1); // still debouncing
    await vi.advanceTimersByTimeAsync(60);
    expect(port.calls.length).toBe(2); // one request for the whole scrub
    expect(JSON.parse(port.calls[1]).p_exa).toBe(1.5); // final value won
  });

  it("rendered data equals the service response bytes", async () => {
    const port = new FakePort();
    const { controller, renders } = makeController(port);
    await controller.setModel("m1");
    controller.update({ p_exa: 1.5 });
    await vi.advanceTimersByTimeAsync(60);

    const latest = controller.latest!;
    expect(renders[renders.length - 1]).toBe(latest.raw);
    expect(latest.raw).toBe(trajectoryBytes(1.5)); // exactly what the port sent
    expect(latest.trajectory).toEqual(JSON.parse(latest.raw));
  });

  it("a stale response never overwrites a fresher one", async () => {
    const port = new FakePort();
    const { controller } = makeController(port);
    await controller.setModel("m1");

    port.holdResponses = true;
    controller.update({ p_exa: 1.2 });
    await vi.advanceTimersByTimeAsync(60); // first request now in flight
    controller.update({ p_exa: 2.0 });
    await vi.advanceTimersByTimeAsync(60); // second request in flight
    expect(port.calls.length).toBe(3);
    port.releaseAll();
    await vi.advanceTimersByTimeAsync(1);

    expect(controller.latest!.raw).toBe(trajectoryBytes(2.0));
  });

  it("neutral sliders overlay the baseline exactly (pixel snapshot)", async () => {
    const port = new FakePort();
    const { controller } = makeController(port);
    await controller.setModel("m1");
    const baseline = controller.baseline!;

    controller.update({ p_exa: 1.8 }); // away from neutral...
    await vi.advanceTimersByTimeAsync(60);
    expect(controller.latest!.raw).not.toBe(baseline.raw);

    controller.update({ p_exa: 1 }); // ...and back
    await vi.advanceTimersByTimeAsync(60);
    expect(controller.config).toEqual(neutralConfig());
    expect(controller.latest!.raw).toBe(baseline.raw);

    const demoSeries: Series = {
      label: "demonstration",
      dt: 0.01,
      values: baseline.trajectory.positions.map((r) => r[0]),
      dashed: true,
      color: "#444",
    };
    const draw = (resp: typeof baseline) =>
      renderChart([
        demoSeries,
        {
          label: "modulated",
          dt: resp.trajectory.dt,
          values: resp.trajectory.positions.map((r) => r[0]),
          color: "#0b66c3",
          width: 2,
        },
      ]);
    const neutralSvg = draw(controller.latest!);
    expect(neutralSvg).toBe(draw(baseline)); // pixel-identical markup
    expect(neutralSvg).toMatchSnapshot();
  });
});
