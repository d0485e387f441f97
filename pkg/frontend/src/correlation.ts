/** Scatter of distance progress (-d_s0) against entropy consumption
 * (|d_sre|) per step, restricted to the outlier filter used by the stats
 * command, with a least-squares trend and the Pearson r per panel.
 */

import { OCHRE } from "./colors.js";
import { axes, circle, figure, line, linearScale, metadataFooter, text } from "./svg.js";
import { loadPooledSteps, loadStats, type PooledStep } from "./traceData.js";
import { join } from "node:path";

const WIDTH = 560;
const PANEL_H = 260;
const MARGIN = { left: 64, right: 16, top: 42, bottom: 50 };

export interface CorrelationPanel {
  ansatz: string;
  points: Array<[number, number]>; // (-d_s0, |d_sre|), already filtered
  retention: number;
  pearson: number | null;
}

export function pearson(points: Array<[number, number]>): number | null {
  if (points.length < 2) return null;
  const xs = points.map((p) => p[0]);
  const ys = points.map((p) => p[1]);
  const mean = (v: number[]) => v.reduce((a, b) => a + b, 0) / v.length;
  const mx = mean(xs);
  const my = mean(ys);
  let sxy = 0;
  let sxx = 0;
  let syy = 0;
  for (const [px, py] of points) {
    sxy += (px - mx) * (py - my);
    sxx += (px - mx) ** 2;
    syy += (py - my) ** 2;
  }
  if (sxx === 0 || syy === 0) return null;
  return sxy / Math.sqrt(sxx * syy);
}

function trendLine(points: Array<[number, number]>): [number, number] | null {
  if (points.length < 2) return null;
  const n = points.length;
  const sx = points.reduce((a, [px]) => a + px, 0);
  const sy = points.reduce((a, [, py]) => a + py, 0);
  const sxx = points.reduce((a, [px]) => a + px * px, 0);
  const sxy = points.reduce((a, [px, py]) => a + px * py, 0);
  const denom = n * sxx - sx * sx;
  if (denom === 0) return null;
  const slope = (n * sxy - sx * sy) / denom;
  return [(sy - slope * sx) / n, slope];
}

export function renderCorrelation(panels: CorrelationPanel[], meta: Record<string, unknown>): string {
  if (panels.length === 0) {
    throw new Error("no pooled step files found");
  }
  const height = MARGIN.top + panels.length * PANEL_H + 10;
  const body: string[] = [];
  panels.forEach((panel, i) => {
    const top = MARGIN.top + i * PANEL_H;
    const bottom = top + PANEL_H - MARGIN.bottom;
    const xs = panel.points.map((p) => p[0]);
    const ys = panel.points.map((p) => p[1]);
    const x = linearScale(
      [Math.min(0, ...xs), Math.max(0.01, ...xs)],
      [MARGIN.left, WIDTH - MARGIN.right],
    );
    const y = linearScale([0, Math.max(0.01, ...ys)], [bottom, top + 16]);
    body.push(text(MARGIN.left, top + 8, panel.ansatz, { size: 12 }));
    body.push(axes({ x, y, xLabel: "distance progress per step", yLabel: "|entropy step|" }));
    for (const [px, py] of panel.points) {
      body.push(circle(x(px), y(py), 2, OCHRE, 0.5));
    }
    const trend = trendLine(panel.points);
    if (trend) {
      const [a, b] = trend;
      const [x0, x1] = x.domain;
      body.push(line(x(x0), y(Math.max(0, a + b * x0)), x(x1), y(Math.max(0, a + b * x1)), "#333", 1.3));
    }
    const rLabel = panel.pearson === null ? "undefined" : panel.pearson.toFixed(3);
    body.push(
      text(WIDTH - MARGIN.right, top + 8, `r=${rLabel}  retained=${(panel.retention * 100).toFixed(1)}%`, {
        size: 10,
        anchor: "end",
      }),
    );
  });
  return figure(body.join("\n"), {
    width: WIDTH,
    height,
    title: "Entropy consumption vs distance progress",
    footer: metadataFooter(meta),
  });
}

export function renderCorrelationDir(statsDir: string): string {
  const stats = loadStats(statsDir);
  const panels: CorrelationPanel[] = Object.keys(stats.ansatz)
    .sort()
    .map((ansatz) => {
      const steps = loadPooledSteps(join(statsDir, `pooled_steps_${ansatz}.csv`));
      const kept = steps.filter((s: PooledStep) => s.retained);
      const points = kept.map((s: PooledStep) => [-s.dS0, Math.abs(s.dSre)] as [number, number]);
      return {
        ansatz,
        points,
        retention: steps.length > 0 ? kept.length / steps.length : 0,
        pearson: pearson(points),
      };
    });
  return renderCorrelation(panels, { ...stats.config, dsre_filter: stats.dsreFilter });
}
