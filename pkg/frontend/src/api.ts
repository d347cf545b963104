// Typed client for the service API. Trajectory responses are kept as
// raw bytes next to their parsed form: what the chart renders is
// exactly what the service sent.

export interface DemoInfo {
  demo_id: string;
  n_steps: number;
  n_dims: number;
  dt: number;
  dim_names: string[] | null;
}

export interface ModelInfo {
  model_id: string;
  n_dims: number;
  tau: number;
  dt: number;
  dim_names: string[] | null;
  demo_id?: string;
  n_basis?: number;
  rmse?: number;
}

export interface TrajectoryDoc {
  format_version: number;
  kind: "trajectory";
  dt: number;
  positions: number[][];
  velocities: number[][];
  accelerations: number[][];
  phase: number[];
}

export interface TrajectoryResponse {
  raw: string;
  trajectory: TrajectoryDoc;
}

export interface RobotJoint {
  name: string;
  parent: string | null;
  axis: [number, number, number];
  dim_index: number;
  limits?: [number, number];
}

export interface RobotDoc {
  format_version: number;
  kind: "robot";
  axis_threshold_deg: number;
  joints: RobotJoint[];
}

export interface ServiceError {
  message: string;
  violations?: { rule: string; message: string }[];
}

export class ApiError extends Error {
  status: number;
  violations: { rule: string; message: string }[];

  constructor(status: number, body: ServiceError) {
    super(body.message);
    this.status = status;
    this.violations = body.violations ?? [];
  }
}

async function fail(resp: Response): Promise<never> {
  let body: ServiceError = { message: `${resp.status} ${resp.statusText}` };
  try {
    const parsed = await resp.json();
    if (parsed && parsed.error) body = parsed.error;
  } catch {
    // non-JSON error body; keep the status text
  }
  throw new ApiError(resp.status, body);
}

export class ApiClient {
  constructor(private base = "") {}

  async listDemos(): Promise<DemoInfo[]> {
    const resp = await fetch(`${this.base}/api/demos`);
    if (!resp.ok) return fail(resp);
    return (await resp.json()).demos;
  }

  async getDemoCsv(demoId: string): Promise<string> {
    const resp = await fetch(`${this.base}/api/demos/${demoId}`);
    if (!resp.ok) return fail(resp);
    return resp.text();
  }

  async uploadDemo(csv: string): Promise<string> {
    const resp = await fetch(`${this.base}/api/demos`, {
      method: "POST",
      headers: { "content-type": "text/csv" },
      body: csv,
    });
    if (!resp.ok) return fail(resp);
    return (await resp.json()).demo_id;
  }

  async trainModel(demoId: string, nBasis: number): Promise<{ model_id: string; rmse: number }> {
    const resp = await fetch(`${this.base}/api/models`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ demo_id: demoId, n_basis: nBasis }),
    });
    if (!resp.ok) return fail(resp);
    return resp.json();
  }

  async listModels(): Promise<ModelInfo[]> {
    const resp = await fetch(`${this.base}/api/models`);
    if (!resp.ok) return fail(resp);
    return (await resp.json()).models;
  }

  async listRobots(): Promise<string[]> {
    const resp = await fetch(`${this.base}/api/robots`);
    if (!resp.ok) return fail(resp);
    return (await resp.json()).robots;
  }

  async getRobot(name: string): Promise<RobotDoc> {
    const resp = await fetch(`${this.base}/api/robots/${name}`);
    if (!resp.ok) return fail(resp);
    return resp.json();
  }

  rolloutUrl(modelId: string, opts: { robot?: string; settle?: number; format?: string } = {}): string {
    const params = new URLSearchParams();
    if (opts.robot) params.set("robot", opts.robot);
    if (opts.settle !== undefined) params.set("settle", String(opts.settle));
    if (opts.format) params.set("format", opts.format);
    const query = params.toString();
    return `${this.base}/api/models/${modelId}/rollout${query ? `?${query}` : ""}`;
  }

  async rollout(modelId: string, configBody: string, opts: { robot?: string; settle?: number } = {}): Promise<TrajectoryResponse> {
    const resp = await fetch(this.rolloutUrl(modelId, opts), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: configBody,
    });
    if (!resp.ok) return fail(resp);
    const raw = await resp.text();
    return { raw, trajectory: JSON.parse(raw) as TrajectoryDoc };
  }

  async rolloutCsv(modelId: string, configBody: string, opts: { robot?: string; settle?: number } = {}): Promise<string> {
    const resp = await fetch(this.rolloutUrl(modelId, { ...opts, format: "csv" }), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: configBody,
    });
    if (!resp.ok) return fail(resp);
    return resp.text();
  }
}
