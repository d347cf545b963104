// SVG chart rendering as pure string functions: data in, markup out.
// Pure functions keep the rendering pixel-deterministic and testable
// without a browser; the page just assigns innerHTML.

export interface Series {
  label: string;
  dt: number;
  values: number[];
  dashed?: boolean;
  color: string;
  width?: number;
}

export interface ChartOptions {
  width?: number;
  height?: number;
  title?: string;
}

const PAD = { left: 42, right: 10, top: 20, bottom: 24 };

function extent(series: Series[]): { tMax: number; yMin: number; yMax: number } {
  let tMax = 0;
  let yMin = Infinity;
  let yMax = -Infinity;
  for (const s of series) {
    tMax = Math.max(tMax, (s.values.length - 1) * s.dt);
    for (const v of s.values) {
      yMin = Math.min(yMin, v);
      yMax = Math.max(yMax, v);
    }
  }
  if (!isFinite(yMin)) {
    yMin = 0;
    yMax = 1;
  }
  if (yMax - yMin < 1e-12) {
    yMin -= 0.5;
    yMax += 0.5;
  }
  return { tMax: tMax || 1, yMin, yMax };
}

export function pathData(
  s: Series,
  scale: { tMax: number; yMin: number; yMax: number },
  width: number,
  height: number,
): string {
  const innerW = width - PAD.left - PAD.right;
  const innerH = height - PAD.top - PAD.bottom;
  const pts = s.values.map((v, i) => {
    const x = PAD.left + ((i * s.dt) / scale.tMax) * innerW;
    const y = PAD.top + (1 - (v - scale.yMin) / (scale.yMax - scale.yMin)) * innerH;
    return `${x.toFixed(2)},${y.toFixed(2)}`;
  });
  return `M${pts.join(" L")}`;
}

export function renderChart(series: Series[], options: ChartOptions = {}): string {
  const width = options.width ?? 560;
  const height = options.height ?? 240;
  const scale = extent(series);
  const paths = series
    .map((s) => {
      const dash = s.dashed ? ' stroke-dasharray="6 4"' : "";
      return (
        `<path d="${pathData(s, scale, width, height)}" fill="none" ` +
        `stroke="${s.color}" stroke-width="${s.width ?? 1.5}"${dash} ` +
        `data-label="${s.label}"/>`
      );
    })
    .join("");
  const legend = series
    .map(
      (s, i) =>
        `<text x="${PAD.left + 8 + i * 130}" y="13" fill="${s.color}" ` +
        `font-size="11">${s.dashed ? "- - " : "— "}${s.label}</text>`,
    )
    .join("");
  const axis =
    `<line x1="${PAD.left}" y1="${height - PAD.bottom}" x2="${width - PAD.right}" ` +
    `y2="${height - PAD.bottom}" stroke="#999"/>` +
    `<line x1="${PAD.left}" y1="${PAD.top}" x2="${PAD.left}" ` +
    `y2="${height - PAD.bottom}" stroke="#999"/>` +
    `<text x="${width - PAD.right - 30}" y="${height - 6}" font-size="10" ` +
    `fill="#666">t [s]</text>` +
    (options.title
      ? `<text x="${PAD.left}" y="${height - 6}" font-size="11" fill="#333">${options.title}</text>`
      : "");
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
    `viewBox="0 0 ${width} ${height}">${axis}${legend}${paths}</svg>`
  );
}

// Orthographic projection for the optional 3-D path view. Fixed view
// angles keep the output deterministic.
export function project3d(points: number[][], yaw = 0.7, pitch = 0.45): [number, number][] {
  const cy = Math.cos(yaw);
  const sy = Math.sin(yaw);
  const cp = Math.cos(pitch);
  const sp = Math.sin(pitch);
  return points.map(([x, y, z]) => {
    const x1 = cy * x + sy * y;
    const y1 = -sy * x + cy * y;
    const z1 = cp * z - sp * y1;
    return [x1, z1];
  });
}

export function render3dPath(
  paths: { points: number[][]; color: string; dashed?: boolean; label: string }[],
  options: ChartOptions = {},
): string {
  const width = options.width ?? 320;
  const height = options.height ?? 320;
  const projected = paths.map((p) => ({ ...p, flat: project3d(p.points) }));
  let xMin = Infinity;
  let xMax = -Infinity;
  let yMin = Infinity;
  let yMax = -Infinity;
  for (const p of projected) {
    for (const [x, y] of p.flat) {
      xMin = Math.min(xMin, x);
      xMax = Math.max(xMax, x);
      yMin = Math.min(yMin, y);
      yMax = Math.max(yMax, y);
    }
  }
  const span = Math.max(xMax - xMin, yMax - yMin, 1e-9);
  const margin = 18;
  const s = (width - 2 * margin) / span;
  const body = projected
    .map((p) => {
      const pts = p.flat
        .map(([x, y]) => `${(margin + (x - xMin) * s).toFixed(2)},${(height - margin - (y - yMin) * s).toFixed(2)}`)
        .join(" L");
      const dash = p.dashed ? ' stroke-dasharray="6 4"' : "";
      return `<path d="M${pts}" fill="none" stroke="${p.color}" stroke-width="1.2"${dash} data-label="${p.label}"/>`;
    })
    .join("");
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
    `viewBox="0 0 ${width} ${height}">${body}</svg>`
  );
}
