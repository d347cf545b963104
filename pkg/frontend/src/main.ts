// DOM wiring for the playground: demo picker, training, the parameter
// panel (one slider per modulation parameter), coupling pickers fed by
// the selected robot config, per-dimension charts with the dashed
// demonstration overlay, an optional 3-D path view, and CSV export.

import { ApiClient, ApiError, RobotDoc, TrajectoryDoc } from "./api.js";
import { renderChart, render3dPath, Series } from "./chart.js";
import {
  Coupling,
  ModulationConfig,
  PhaseChoice,
  SLIDERS,
  SLOW_K_SLIDER,
  TIMING_PRESETS,
  applyPhaseChoice,
  configBody,
} from "./config.js";
import { parseDemoCsv, DemoData } from "./csv.js";
import { PlaygroundController } from "./state.js";

const api = new ApiClient();
const $ = <T extends HTMLElement>(id: string): T =>
  document.getElementById(id) as T;

let demoData: DemoData | null = null;
let robotDoc: RobotDoc | null = null;
let phaseChoice: PhaseChoice = "linear";
let slowK = SLOW_K_SLIDER.neutral;
let timingPreset = Object.keys(TIMING_PRESETS)[0];

const controller = new PlaygroundController(api, {
  debounceMs: 50,
  settle: 0.5,
  onRender: render,
  onError: showError,
});

function showError(err: unknown): void {
  const box = $("status");
  if (err instanceof ApiError && err.violations.length) {
    box.textContent = err.violations
      .map((v) => `${v.rule}: ${v.message}`)
      .join("\n");
  } else {
    box.textContent = String(err instanceof Error ? err.message : err);
  }
  box.classList.add("error");
}

function clearError(): void {
  const box = $("status");
  box.textContent = "";
  box.classList.remove("error");
}

function seriesForDim(traj: TrajectoryDoc, dim: number): Series[] {
  const series: Series[] = [];
  if (demoData && dim < demoData.positions[0].length) {
    series.push({
      label: "demonstration",
      dt: demoData.dt,
      values: demoData.positions.map((row) => row[dim]),
      dashed: true,
      color: "#444",
    });
  }
  series.push({
    label: "modulated",
    dt: traj.dt,
    values: traj.positions.map((row) => row[dim]),
    color: "#0b66c3",
    width: 2,
  });
  return series;
}

function render(c: PlaygroundController): void {
  clearError();
  const host = $("charts");
  if (!c.latest) {
    host.innerHTML = "<p>train or pick a model to see trajectories</p>";
    return;
  }
  const traj = c.latest.trajectory;
  const dims = traj.positions[0].length;
  const names = demoData?.dimNames;
  let html = "";
  for (let d = 0; d < dims; d++) {
    html += `<div class="chart">${renderChart(seriesForDim(traj, d), {
      title: names?.[d] ?? `dimension ${d}`,
    })}</div>`;
  }
  if (dims === 3) {
    const paths = [];
    if (demoData) {
      paths.push({
        points: demoData.positions,
        color: "#444",
        dashed: true,
        label: "demonstration",
      });
    }
    paths.push({ points: traj.positions, color: "#0b66c3", label: "modulated" });
    html += `<div class="chart">${render3dPath(paths)}</div>`;
  }
  host.innerHTML = html;
}

function sliderRow(spec: { key: string; label: string; min: number; max: number; step: number; neutral: number },
                   value: number, oninput: (v: number) => void): HTMLElement {
  const row = document.createElement("div");
  row.className = "param";
  const label = document.createElement("label");
  label.textContent = spec.label;
  const input = document.createElement("input");
  input.type = "range";
  input.min = String(spec.min);
  input.max = String(spec.max);
  input.step = String(spec.step);
  input.value = String(value);
  const readout = document.createElement("span");
  readout.textContent = String(value);
  const neutralMark = document.createElement("button");
  neutralMark.textContent = `↺ ${spec.neutral}`;
  neutralMark.title = "reset to neutral";
  neutralMark.onclick = () => {
    input.value = String(spec.neutral);
    readout.textContent = input.value;
    oninput(spec.neutral);
  };
  input.oninput = () => {
    readout.textContent = input.value;
    oninput(Number(input.value));
  };
  row.append(label, input, readout, neutralMark);
  return row;
}

function buildParameterPanel(): void {
  const panel = $("params");
  panel.innerHTML = "";
  for (const spec of SLIDERS) {
    const current = controller.config[spec.key] as number | null;
    panel.append(
      sliderRow(spec, current ?? spec.neutral, (v) => {
        controller.update({ [spec.key]: v } as Partial<ModulationConfig>);
      }),
    );
  }

  // Phase selector: linear / slow sigmoid / sector timing, exclusive.
  const phaseRow = document.createElement("div");
  phaseRow.className = "param";
  const phaseLabel = document.createElement("label");
  phaseLabel.textContent = "phase progression";
  const select = document.createElement("select");
  for (const choice of ["linear", "slow", "timing"] as PhaseChoice[]) {
    const option = document.createElement("option");
    option.value = choice;
    option.textContent =
      choice === "linear" ? "linear (neutral)" : choice === "slow" ? "slow-in/slow-out" : "sector timing";
    select.append(option);
  }
  select.value = phaseChoice;
  const slowRow = sliderRow(SLOW_K_SLIDER, slowK, (v) => {
    slowK = v;
    applyPhase();
  });
  const presetSelect = document.createElement("select");
  for (const name of Object.keys(TIMING_PRESETS)) {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = name;
    presetSelect.append(option);
  }
  presetSelect.value = timingPreset;
  const syncPhaseControls = () => {
    slowRow.style.display = phaseChoice === "slow" ? "" : "none";
    presetSelect.style.display = phaseChoice === "timing" ? "" : "none";
  };
  const applyPhase = () => {
    controller.replaceConfig(
      applyPhaseChoice(controller.config, phaseChoice, slowK,
                       TIMING_PRESETS[timingPreset]),
    );
  };
  select.onchange = () => {
    phaseChoice = select.value as PhaseChoice;
    syncPhaseControls();
    applyPhase();
  };
  presetSelect.onchange = () => {
    timingPreset = presetSelect.value;
    applyPhase();
  };
  phaseRow.append(phaseLabel, select, presetSelect);
  panel.append(phaseRow, slowRow);
  syncPhaseControls();

  buildCouplingPickers();
}

function couplingPicker(
  kind: "sec" | "follow",
  onchange: (couplings: Coupling[]) => void,
): HTMLElement {
  const row = document.createElement("div");
  row.className = "param";
  const label = document.createElement("label");
  label.textContent = kind === "sec" ? "secondary coupling" : "follow coupling";
  const src = document.createElement("select");
  const tgt = document.createElement("select");
  const delta = document.createElement("select");
  for (const d of ["+1", "-1"]) {
    const option = document.createElement("option");
    option.value = d;
    option.textContent = `δ ${d}`;
    delta.append(option);
  }
  const dims = robotDoc
    ? robotDoc.joints.map((j) => ({ index: j.dim_index, name: j.name }))
    : [];
  for (const sel of [src, tgt]) {
    const none = document.createElement("option");
    none.value = "";
    none.textContent = "(none)";
    sel.append(none);
    for (const d of dims) {
      const option = document.createElement("option");
      option.value = String(d.index);
      option.textContent = `${d.index}: ${d.name}`;
      sel.append(option);
    }
    sel.disabled = dims.length === 0;
  }
  const fire = () => {
    if (src.value === "" || tgt.value === "") {
      onchange([]);
      return;
    }
    onchange([
      {
        source: Number(src.value),
        target: Number(tgt.value),
        delta: delta.value === "-1" ? -1 : 1,
      },
    ]);
  };
  src.onchange = fire;
  tgt.onchange = fire;
  delta.onchange = fire;
  if (dims.length === 0) {
    const hint = document.createElement("span");
    hint.textContent = "pick a robot to enable couplings";
    row.append(label, hint);
  } else {
    row.append(label, src, tgt, delta);
  }
  return row;
}

function buildCouplingPickers(): void {
  const panel = $("couplings");
  panel.innerHTML = "";
  panel.append(
    couplingPicker("sec", (c) => controller.update({ sec_couplings: c })),
    couplingPicker("follow", (c) => controller.update({ follow_couplings: c })),
  );
}

async function refreshDemos(): Promise<void> {
  const demos = await api.listDemos();
  const select = $("demo-select") as unknown as HTMLSelectElement;
  select.innerHTML = "";
  for (const d of demos) {
    const option = document.createElement("option");
    option.value = d.demo_id;
    option.textContent = `${d.demo_id} (${d.n_dims}D, ${d.n_steps} steps)`;
    select.append(option);
  }
  return;
}

async function loadDemoOverlay(demoId: string): Promise<void> {
  demoData = parseDemoCsv(await api.getDemoCsv(demoId));
}

async function init(): Promise<void> {
  buildParameterPanel();
  await refreshDemos().catch(showError);

  const robotSelect = $("robot-select") as unknown as HTMLSelectElement;
  const names = await api.listRobots().catch(() => [] as string[]);
  robotSelect.innerHTML = "<option value=''>(no robot)</option>";
  for (const name of names) {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = name;
    robotSelect.append(option);
  }
  robotSelect.onchange = async () => {
    const name = robotSelect.value || null;
    controller.setRobot(name);
    robotDoc = name ? await api.getRobot(name) : null;
    buildCouplingPickers();
  };

  $("upload").onclick = () => {
    const file = ($("demo-file") as unknown as HTMLInputElement).files?.[0];
    if (!file) return;
    void file.text().then(async (text) => {
      await api.uploadDemo(text).catch(showError);
      await refreshDemos();
    });
  };

  $("train").onclick = async () => {
    clearError();
    const select = $("demo-select") as unknown as HTMLSelectElement;
    const nBasis = Number(($("n-basis") as unknown as HTMLInputElement).value);
    if (!select.value) return;
    try {
      await loadDemoOverlay(select.value);
      const { model_id, rmse } = await api.trainModel(select.value, nBasis);
      $("status").textContent =
        `model ${model_id} trained, reconstruction rmse ${rmse.toExponential(2)}`;
      await controller.setModel(model_id);
      buildParameterPanel();
    } catch (err) {
      showError(err);
    }
  };

  $("export").onclick = async () => {
    if (!controller.modelId) return;
    // The download is the service's own CSV rendering of the current config.
    const csv = await api.rolloutCsv(controller.modelId, configBody(controller.config), {
      robot: controller.robot ?? undefined,
      settle: 0.5,
    });
    const blob = new Blob([csv], { type: "text/csv" });
    const a = document.createElement("a");
    a.href = URL.createObjectURL(blob);
    a.download = `trajectory_${controller.modelId}.csv`;
    a.click();
    URL.revokeObjectURL(a.href);
  };
}

void init();
