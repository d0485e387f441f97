/** Figure-rendering CLI over magictrace output files.
 *
 *   node dist/cli.js qft-distance --trace <trace.csv> --out fig.svg
 *   node dist/cli.js heatmaps --trace-dir <dir> --ansatz structured --out fig.svg
 *   node dist/cli.js histogram --stats-dir <dir> [--bins 60] --out fig.svg
 *   node dist/cli.js correlation --stats-dir <dir> --out fig.svg
 *   node dist/cli.js spectrum --csv <spectrum.csv> --out fig.svg
 *   node dist/cli.js all --samples <dir> --out <dir>
 */

import { mkdirSync, writeFileSync } from "node:fs";
import { dirname, join } from "node:path";

import { renderCorrelationDir } from "./correlation.js";
import { renderHeatmapsDir } from "./heatmaps.js";
import { DEFAULT_BINS, renderDeltaHistogramDir } from "./histogram.js";
import { renderQftDistanceFile } from "./qftDistance.js";
import { renderSpectrumFile } from "./spectrum.js";

function parseFlags(argv: string[]): Map<string, string> {
  const flags = new Map<string, string>();
  for (let i = 0; i < argv.length; i += 2) {
    const key = argv[i];
    const value = argv[i + 1];
    if (!key.startsWith("--") || value === undefined) {
      throw new Error(`expected --flag value pairs, got '${argv.slice(i).join(" ")}'`);
    }
    flags.set(key.slice(2), value);
  }
  return flags;
}

function need(flags: Map<string, string>, name: string): string {
  const value = flags.get(name);
  if (value === undefined) {
    throw new Error(`missing required flag --${name}`);
  }
  return value;
}

function write(path: string, svg: string): void {
  mkdirSync(dirname(path), { recursive: true });
  writeFileSync(path, svg);
  console.log(`wrote ${path}`);
}

export function main(argv: string[]): void {
  const [command, ...rest] = argv;
  if (!command) {
    throw new Error("usage: cli.js <qft-distance|heatmaps|histogram|correlation|spectrum|all> ...");
  }
  const flags = parseFlags(rest);
  switch (command) {
    case "qft-distance":
      write(need(flags, "out"), renderQftDistanceFile(need(flags, "trace")));
      break;
    case "heatmaps": {
      const ansatz = flags.get("ansatz") ?? "structured";
      write(need(flags, "out"), renderHeatmapsDir(need(flags, "trace-dir"), ansatz));
      break;
    }
    case "histogram": {
      const bins = flags.has("bins") ? Number(flags.get("bins")) : DEFAULT_BINS;
      write(need(flags, "out"), renderDeltaHistogramDir(need(flags, "stats-dir"), bins));
      break;
    }
    case "correlation":
      write(need(flags, "out"), renderCorrelationDir(need(flags, "stats-dir")));
      break;
    case "spectrum":
      write(need(flags, "out"), renderSpectrumFile(need(flags, "csv")));
      break;
    case "all": {
      const samples = flags.get("samples") ?? join(dirname(new URL(import.meta.url).pathname), "..", "samples");
      const out = need(flags, "out");
      write(join(out, "qft_distance.svg"),
        renderQftDistanceFile(join(samples, "qft_n4_x0101.csv")));
      for (const ansatz of ["structured", "unstructured"]) {
        write(join(out, `heatmaps_${ansatz}.svg`),
          renderHeatmapsDir(join(samples, "run", "traces"), ansatz));
      }
      write(join(out, "delta_histogram.svg"),
        renderDeltaHistogramDir(join(samples, "run", "traces")));
      write(join(out, "correlation.svg"),
        renderCorrelationDir(join(samples, "run", "traces")));
      write(join(out, "colour_spectrum.svg"),
        renderSpectrumFile(join(samples, "spectrum_qft_n3.csv")));
      break;
    }
    default:
      throw new Error(`unknown command '${command}'`);
  }
}

const invokedDirectly = process.argv[1] && import.meta.url.endsWith(process.argv[1].split("/").pop() ?? "");
if (invokedDirectly) {
  main(process.argv.slice(2));
}
