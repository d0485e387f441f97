/** Distance-vs-depth figure for the transform-circuit demo: the
 * permutation-minimised distance (ochre) against the plain space distance
 * (black), with the final swap block shaded. The ochre curve reaching its
 * floor before the shaded block is the masked-progress signature.
 */

import { BLACK, OCHRE } from "./colors.js";
import { axes, figure, line, linearScale, metadataFooter, polyline, rect, text } from "./svg.js";
import { loadTrace, type Trace } from "./traceData.js";

const WIDTH = 640;
const HEIGHT = 420;
const MARGIN = { left: 64, right: 16, top: 40, bottom: 48 };

export function renderQftDistance(trace: Trace): string {
  const { steps } = trace;
  if (steps.length < 2) {
    throw new Error("trace has no gate steps to plot");
  }
  const x = linearScale([0, 1], [MARGIN.left, WIDTH - MARGIN.right]);
  const yMax = Math.max(Math.PI, ...steps.map((s) => s.s0Literal));
  const y = linearScale([0, yMax], [HEIGHT - MARGIN.bottom, MARGIN.top]);

  const body: string[] = [];
  const firstSwap = steps.find((s) => s.gate === "SWAP");
  if (firstSwap) {
    // each step's x marks that gate's completion, so the block region
    // spans the swap steps themselves; the pre-swap state sits just left
    // of the shading
    const x0 = x(firstSwap.relDepth);
    body.push(rect(x0, MARGIN.top, x(1) - x0, y(0) - MARGIN.top, "#bbbbbb", 0.35));
    body.push(text(x0 + 4, MARGIN.top + 14, "swap block", { size: 10, fill: "#555" }));
  }
  body.push(axes({ x, y, xLabel: "relative circuit depth", yLabel: "distance to target space (rad)" }));
  body.push(polyline(steps.map((s) => [x(s.relDepth), y(s.s0Literal)]), BLACK));
  body.push(polyline(steps.map((s) => [x(s.relDepth), y(s.s0PermLiteral)]), OCHRE, 2));
  body.push(line(x(0), y(0), x(1), y(0), "#444", 0.5, "2,3"));

  const legendX = WIDTH - MARGIN.right - 190;
  body.push(line(legendX, MARGIN.top + 8, legendX + 24, MARGIN.top + 8, OCHRE, 2));
  body.push(text(legendX + 30, MARGIN.top + 12, "min over qubit relabellings", { size: 10 }));
  body.push(line(legendX, MARGIN.top + 24, legendX + 24, MARGIN.top + 24, BLACK, 2));
  body.push(text(legendX + 30, MARGIN.top + 28, "as-laid-out distance", { size: 10 }));

  return figure(body.join("\n"), {
    width: WIDTH,
    height: HEIGHT,
    title: `Masked progress: ${trace.instanceId}`,
    footer: `${metadataFooter(trace.meta)}  distance=2*arccos(<Hc>)`,
  });
}

export function renderQftDistanceFile(csvPath: string): string {
  return renderQftDistance(loadTrace(csvPath));
}
