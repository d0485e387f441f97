/** Minimal CSV reading for the harness's output files.
 *
 * The harness writes plain comma-separated values without quoting (gate
 * and qubit columns use ';' internally), so a split-based parser is exact.
 */

import { readFileSync } from "node:fs";

export type Row = Record<string, string>;

export function parseCsv(text: string): Row[] {
  const lines = text.split("\n").filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new Error("empty CSV: no header row");
  }
  const header = lines[0].split(",");
  if (lines.length === 1) {
    throw new Error("empty CSV: header but no data rows");
  }
  return lines.slice(1).map((line, i) => {
    const cells = line.split(",");
    if (cells.length !== header.length) {
      throw new Error(`row ${i + 1} has ${cells.length} cells, expected ${header.length}`);
    }
    const row: Row = {};
    header.forEach((name, k) => (row[name] = cells[k]));
    return row;
  });
}

export function readCsv(path: string): Row[] {
  return parseCsv(readFileSync(path, "utf8"));
}

export function num(row: Row, column: string): number {
  const cell = row[column];
  if (cell === undefined) {
    throw new Error(`missing column '${column}'`);
  }
  const value = Number(cell);
  if (cell !== "nan" && Number.isNaN(value)) {
    throw new Error(`column '${column}' holds non-numeric value '${cell}'`);
  }
  return value;
}
