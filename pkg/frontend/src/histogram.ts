/** Histogram of the per-step distance deltas, one panel per ansatz,
 * mirroring the distribution comparison between structured and
 * unstructured evolutions.
 */

import { OCHRE } from "./colors.js";
import { axes, figure, line, linearScale, metadataFooter, rect, text } from "./svg.js";
import { loadPooledSteps, loadStats, type PooledStep } from "./traceData.js";
import { existsSync } from "node:fs";
import { join } from "node:path";

const WIDTH = 640;
const PANEL_H = 220;
const MARGIN = { left: 64, right: 16, top: 42, bottom: 50 };

export const DEFAULT_BINS = 60;

export interface HistogramPanel {
  ansatz: string;
  values: number[];
}

export function histogramCounts(values: number[], bins: number, lo: number, hi: number): number[] {
  const counts = new Array<number>(bins).fill(0);
  const span = hi - lo || 1;
  for (const v of values) {
    const bin = Math.max(0, Math.min(bins - 1, Math.floor(((v - lo) / span) * bins)));
    counts[bin] += 1;
  }
  return counts;
}

export function renderDeltaHistogram(
  panels: HistogramPanel[],
  meta: Record<string, unknown>,
  bins = DEFAULT_BINS,
): string {
  if (panels.length === 0) {
    throw new Error("no pooled step files found");
  }
  const allValues = panels.flatMap((p) => p.values);
  if (allValues.length === 0) {
    throw new Error("pooled step files contain no samples");
  }
  const lo = Math.min(...allValues);
  const hi = Math.max(...allValues);
  const height = MARGIN.top + panels.length * PANEL_H + 10;
  const body: string[] = [];

  panels.forEach((panel, i) => {
    const top = MARGIN.top + i * PANEL_H;
    const bottom = top + PANEL_H - MARGIN.bottom;
    const counts = histogramCounts(panel.values, bins, lo, hi);
    const x = linearScale([lo, hi], [MARGIN.left, WIDTH - MARGIN.right]);
    const y = linearScale([0, Math.max(...counts, 1)], [bottom, top + 16]);
    body.push(text(MARGIN.left, top + 8, panel.ansatz, { size: 12 }));
    body.push(axes({ x, y, xLabel: "step change in distance", yLabel: "steps" }));
    const barW = (x(hi) - x(lo)) / bins;
    counts.forEach((count, b) => {
      if (count === 0) return;
      const x0 = x(lo + ((hi - lo) * b) / bins);
      body.push(rect(x0, y(count), barW, y(0) - y(count), OCHRE, 0.85));
    });
    if (lo < 0 && hi > 0) {
      body.push(line(x(0), y(0), x(0), top + 16, "#333", 1, "4,3"));
    }
  });

  return figure(body.join("\n"), {
    width: WIDTH,
    height,
    title: "Distribution of per-step distance changes",
    footer: `${metadataFooter(meta)}  bins=${bins}`,
  });
}

export function renderDeltaHistogramDir(statsDir: string, bins = DEFAULT_BINS): string {
  const stats = loadStats(statsDir);
  const panels: HistogramPanel[] = Object.keys(stats.ansatz)
    .sort()
    .filter((ansatz) => existsSync(join(statsDir, `pooled_steps_${ansatz}.csv`)))
    .map((ansatz) => ({
      ansatz,
      values: loadPooledSteps(join(statsDir, `pooled_steps_${ansatz}.csv`)).map(
        (s: PooledStep) => s.dS0,
      ),
    }));
  return renderDeltaHistogram(panels, stats.config, bins);
}
