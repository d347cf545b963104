// Modulation config mirror of the service's JSON schema, plus the
// slider metadata the parameter panel renders from. The UI never
// computes trajectories; it only assembles this document and ships it.

export interface Coupling {
  source: number;
  target: number;
  delta: 1 | -1;
}

export type PhaseChoice = "linear" | "slow" | "timing";

export interface ModulationConfig {
  format_version: 1;
  kind: "modulation";
  p_arc: number;
  p_ant: number;
  t_ant: number;
  t_ant_fraction: number | null;
  n_ant: number;
  important_dims: number[] | null;
  slow_k: number | null;
  p_time: number;
  timing_sectors: [number, number][] | null;
  p_exa: number;
  p_sec: number;
  sec_couplings: Coupling[];
  p_follow: number;
  follow_couplings: Coupling[];
  p_rand: number;
  seed: number;
  goal_override: number[] | null;
}

export function neutralConfig(): ModulationConfig {
  return {
    format_version: 1,
    kind: "modulation",
    p_arc: 0,
    p_ant: 0,
    t_ant: 0,
    t_ant_fraction: null,
    n_ant: 1,
    important_dims: null,
    slow_k: null,
    p_time: 1,
    timing_sectors: null,
    p_exa: 1,
    p_sec: 0,
    sec_couplings: [],
    p_follow: 0,
    follow_couplings: [],
    p_rand: 0,
    seed: 0,
    goal_override: null,
  };
}

export interface SliderSpec {
  key: "p_arc" | "p_ant" | "t_ant" | "p_time" | "p_exa" | "p_sec" | "p_follow" | "p_rand" | "slow_k";
  label: string;
  min: number;
  max: number;
  step: number;
  neutral: number;
}

// One control per intensity parameter; the neutral value is marked on
// the track and restored by double-click.
export const SLIDERS: SliderSpec[] = [
  { key: "p_arc", label: "arc (broaden + / sharpen -)", min: -8, max: 8, step: 0.1, neutral: 0 },
  { key: "p_ant", label: "anticipation intensity", min: 0, max: 1.5, step: 0.05, neutral: 0 },
  { key: "t_ant", label: "anticipation window [s]", min: 0, max: 1, step: 0.01, neutral: 0 },
  { key: "p_time", label: "time scale", min: 0.25, max: 2, step: 0.05, neutral: 1 },
  { key: "p_exa", label: "exaggeration", min: 0, max: 2.5, step: 0.05, neutral: 1 },
  { key: "p_sec", label: "secondary action", min: 0, max: 0.2, step: 0.005, neutral: 0 },
  { key: "p_follow", label: "follow-through", min: 0, max: 5, step: 0.1, neutral: 0 },
  { key: "p_rand", label: "randomization", min: 0, max: 1.5, step: 0.05, neutral: 0 },
];

export const SLOW_K_SLIDER: SliderSpec = {
  key: "slow_k",
  label: "slow-in/slow-out steepness",
  min: 1,
  max: 20,
  step: 0.5,
  neutral: 8,
};

export const TIMING_PRESETS: Record<string, [number, number][]> = {
  "slow → fast": [[0.5, 0.6], [0.5, 1.4]],
  "fast → slow": [[0.5, 1.4], [0.5, 0.6]],
  "slow / fast / slow": [[0.3, 0.6], [0.4, 1.6], [0.3, 0.6]],
};

// The slow and timing phase functions both own the single shared phase;
// the selector enforces the exclusivity client-side so the service 422
// is never triggered from the panel.
export function applyPhaseChoice(
  config: ModulationConfig,
  choice: PhaseChoice,
  slowK: number,
  sectors: [number, number][] | null,
): ModulationConfig {
  const next = { ...config };
  if (choice === "slow") {
    next.slow_k = slowK;
    next.timing_sectors = null;
  } else if (choice === "timing") {
    next.slow_k = null;
    next.timing_sectors = sectors;
  } else {
    next.slow_k = null;
    next.timing_sectors = null;
  }
  return next;
}

export function isNeutral(config: ModulationConfig): boolean {
  const n = neutralConfig();
  return (
    config.p_arc === n.p_arc &&
    (config.p_ant === 0 || (config.t_ant === 0 && !config.t_ant_fraction)) &&
    config.slow_k === null &&
    config.p_time === 1 &&
    config.timing_sectors === null &&
    config.p_exa === 1 &&
    config.p_sec === 0 &&
    config.p_follow === 0 &&
    config.p_rand === 0 &&
    config.goal_override === null
  );
}

export function configBody(config: ModulationConfig): string {
  return JSON.stringify(config);
}
