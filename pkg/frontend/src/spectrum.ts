/** Qubit colour-spectrum pixel grid: one column per circuit step, one row
 * per sorted rank, each (p0, p+, p+i) triple mapped to an HSV colour with
 * hue = p0 * 360, saturation = p+, value = p+i.
 */

import { colourTriple } from "./colors.js";
import { figure, metadataFooter, rect, text } from "./svg.js";
import { loadSpectrum, loadSpectrumMeta, type SpectrumRow } from "./traceData.js";

const CELL = 16;
const LEFT = 70;
const TOP = 40;

export function renderSpectrum(rows: SpectrumRow[], meta: Record<string, unknown>): string {
  if (rows.length === 0) {
    throw new Error("spectrum CSV has no rows");
  }
  const steps = Math.max(...rows.map((r) => r.step)) + 1;
  const ranks = Math.max(...rows.map((r) => r.rank)) + 1;
  const width = LEFT + steps * CELL + 20;
  const height = TOP + ranks * CELL + 50;

  const body: string[] = [];
  for (const row of rows) {
    body.push(
      rect(LEFT + row.step * CELL, TOP + row.rank * CELL, CELL, CELL,
        colourTriple(row.p0, row.pplus, row.pplusi)),
    );
  }
  for (let r = 0; r < ranks; r += 1) {
    body.push(text(LEFT - 6, TOP + r * CELL + CELL - 4, `#${r + 1}`, { size: 9, anchor: "end" }));
  }
  body.push(text(LEFT, TOP + ranks * CELL + 16, "step 0", { size: 9 }));
  body.push(text(LEFT + steps * CELL, TOP + ranks * CELL + 16, `step ${steps - 1}`, {
    size: 9,
    anchor: "end",
  }));
  body.push(text(LEFT + (steps * CELL) / 2, TOP + ranks * CELL + 34, "circuit step", {
    size: 11,
    anchor: "middle",
  }));

  return figure(body.join("\n"), {
    width,
    height,
    title: "Qubit colour spectrum (sorted per step)",
    footer: metadataFooter(meta),
  });
}

export function renderSpectrumFile(csvPath: string): string {
  return renderSpectrum(loadSpectrum(csvPath), loadSpectrumMeta(csvPath));
}
