/** Per-ansatz heatmap grids over the evolution traces: one row per
 * instance, one column per relative-depth bin, three stacked panels
 * (distance to the permutation-closed target space, entropy, and absolute
 * entropy consumption). Binning is per-trace on normalised depth, so
 * traces of different lengths align.
 */

import { sequential } from "./colors.js";
import { figure, metadataFooter, rect, text, line } from "./svg.js";
import { loadTrace, traceFiles, type Trace } from "./traceData.js";

const CELL_W = 7;
const CELL_H = 12;
const BINS = 48;
const PANEL_GAP = 34;
const LEFT = 120;
const TOP = 40;

type Extract = (t: Trace) => number[];

const PANELS: Array<{ label: string; values: Extract; annotateApex?: boolean }> = [
  {
    label: "distance to [target]",
    values: (t) => t.steps.map((s) => s.s0PermLiteral),
  },
  {
    label: "entropy",
    values: (t) => t.steps.map((s) => s.sre),
    annotateApex: true,
  },
  {
    label: "|entropy step|",
    values: (t) => t.steps.map((s) => Math.abs(s.dSre)),
  },
];

/** Average the per-step series into BINS depth bins, carrying the last
 * value into bins that received no step. */
export function binByDepth(depths: number[], values: number[], bins = BINS): number[] {
  const sums = new Array<number>(bins).fill(0);
  const counts = new Array<number>(bins).fill(0);
  values.forEach((value, i) => {
    if (Number.isNaN(value)) return;
    const bin = Math.min(bins - 1, Math.floor(depths[i] * bins));
    sums[bin] += value;
    counts[bin] += 1;
  });
  const out = new Array<number>(bins).fill(0);
  let last = 0;
  for (let b = 0; b < bins; b += 1) {
    if (counts[b] > 0) last = sums[b] / counts[b];
    out[b] = last;
  }
  return out;
}

export function renderHeatmaps(traces: Trace[], ansatz: string): string {
  const selected = traces.filter((t) => t.ansatz === ansatz);
  if (selected.length === 0) {
    throw new Error(`no traces with ansatz '${ansatz}'`);
  }
  const rows = selected.length;
  const gridW = BINS * CELL_W;
  const panelH = rows * CELL_H;
  const width = LEFT + gridW + 30;
  const height = TOP + PANELS.length * (panelH + PANEL_GAP) + 30;

  const body: string[] = [];
  PANELS.forEach((panel, p) => {
    const top = TOP + p * (panelH + PANEL_GAP);
    const binned = selected.map((t) =>
      binByDepth(t.steps.map((s) => s.relDepth), panel.values(t)),
    );
    const peak = Math.max(1e-12, ...binned.flat());
    body.push(text(LEFT, top - 6, panel.label, { size: 11 }));
    binned.forEach((series, r) => {
      series.forEach((value, b) => {
        body.push(
          rect(LEFT + b * CELL_W, top + r * CELL_H, CELL_W, CELL_H, sequential(value / peak)),
        );
      });
      body.push(
        text(LEFT - 6, top + r * CELL_H + CELL_H - 3, selected[r].instanceId, {
          size: 8,
          anchor: "end",
        }),
      );
    });
    if (panel.annotateApex) {
      const columnMeans = Array.from({ length: BINS }, (_, b) =>
        binned.reduce((acc, series) => acc + series[b], 0) / rows,
      );
      const apex = columnMeans.indexOf(Math.max(...columnMeans));
      const xApex = LEFT + (apex + 0.5) * CELL_W;
      body.push(line(xApex, top - 2, xApex, top + panelH + 2, "#d62728", 1.2, "3,2"));
      body.push(
        text(xApex, top + panelH + 12, `apex @ ${Math.round(((apex + 0.5) / BINS) * 100)}% depth`, {
          size: 9,
          anchor: "middle",
          fill: "#d62728",
        }),
      );
    }
    body.push(text(LEFT, top + panelH + 24, "0", { size: 9 }));
    body.push(text(LEFT + gridW, top + panelH + 24, "1", { size: 9, anchor: "end" }));
  });
  body.push(
    text(LEFT + gridW / 2, height - 18, "relative circuit depth", { size: 11, anchor: "middle" }),
  );

  return figure(body.join("\n"), {
    width,
    height,
    title: `Evolution traces (${ansatz}, ${rows} instances)`,
    footer: metadataFooter(selected[0].meta),
  });
}

export function renderHeatmapsDir(traceDir: string, ansatz: string): string {
  return renderHeatmaps(traceFiles(traceDir).map(loadTrace), ansatz);
}
