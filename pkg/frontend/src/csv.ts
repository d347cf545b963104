// Demonstration CSV parsing: text to arrays for the dashed overlay.
// No numerics happen here, just splitting the service's own format.

export interface DemoData {
  dt: number;
  positions: number[][];
  dimNames: string[] | null;
}

export function parseDemoCsv(text: string): DemoData {
  let dt: number | null = null;
  let dimNames: string[] | null = null;
  const rows: number[][] = [];
  for (const rawLine of text.split(/\r?\n/)) {
    const line = rawLine.trim();
    if (!line) continue;
    if (line.startsWith("#")) {
      const body = line.slice(1).trim();
      if (body.startsWith("dt=")) dt = Number(body.slice(3));
      else if (body.startsWith("dims=")) dimNames = body.slice(5).split(";");
      continue;
    }
    rows.push(line.split(";").map(Number));
  }
  if (dt === null || !isFinite(dt)) throw new Error("demo CSV: missing dt header");
  if (rows.some((r) => r.length !== rows[0].length || r.some((v) => !isFinite(v)))) {
    throw new Error("demo CSV: malformed data rows");
  }
  return { dt, positions: rows, dimNames };
}
