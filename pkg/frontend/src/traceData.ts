/** Loaders for the harness's trace, pooled-steps and stats files. These
 * renderers are pure readers: nothing here mutates the inputs.
 */

import { readFileSync, readdirSync, existsSync } from "node:fs";
import { join } from "node:path";

import { readCsv, num, type Row } from "./csv.js";

export interface TraceStep {
  step: number;
  gate: string;
  relDepth: number;
  sre: number;
  dSre: number;
  s0Literal: number;
  s0PermLiteral: number;
}

export interface Trace {
  instanceId: string;
  ansatz: string;
  steps: TraceStep[];
  meta: Record<string, unknown>;
}

export function loadTrace(csvPath: string): Trace {
  const rows = readCsv(csvPath);
  const steps = rows.map((row) => ({
    step: num(row, "step"),
    gate: row["gate"],
    relDepth: num(row, "rel_depth"),
    sre: num(row, "sre"),
    dSre: num(row, "d_sre"),
    s0Literal: num(row, "s0_T_literal"),
    s0PermLiteral: num(row, "s0_Tperm_literal"),
  }));
  const metaPath = csvPath.replace(/\.csv$/, ".meta.json");
  const meta = existsSync(metaPath)
    ? (JSON.parse(readFileSync(metaPath, "utf8")) as Record<string, unknown>)
    : {};
  return {
    instanceId: rows[0]["instance_id"],
    ansatz: rows[0]["ansatz"],
    steps,
    meta,
  };
}

export function traceFiles(dir: string): string[] {
  return readdirSync(dir)
    .filter((name) => name.endsWith(".csv") && !name.startsWith("pooled_"))
    .sort()
    .map((name) => join(dir, name));
}

export interface PooledStep {
  instanceId: string;
  dS0: number;
  dSre: number;
  retained: boolean;
}

export function loadPooledSteps(path: string): PooledStep[] {
  return readCsv(path).map((row: Row) => ({
    instanceId: row["instance_id"],
    dS0: num(row, "d_s0"),
    dSre: num(row, "d_sre"),
    retained: row["retained"] === "1",
  }));
}

export interface StatsFile {
  config: Record<string, unknown>;
  dsreFilter: number;
  ansatz: Record<
    string,
    { pearson_r: number | null; retained_fraction: number; q1: number; q2: number; q3: number }
  >;
}

export function loadStats(dir: string): StatsFile {
  const raw = JSON.parse(readFileSync(join(dir, "stats.json"), "utf8"));
  return {
    config: raw.config ?? {},
    dsreFilter: raw.dsre_filter,
    ansatz: raw.ansatz,
  };
}

export interface SpectrumRow {
  step: number;
  rank: number;
  p0: number;
  pplus: number;
  pplusi: number;
}

export function loadSpectrum(path: string): SpectrumRow[] {
  return readCsv(path).map((row) => ({
    step: num(row, "step"),
    rank: num(row, "rank"),
    p0: num(row, "p0"),
    pplus: num(row, "pplus"),
    pplusi: num(row, "pplusi"),
  }));
}

export function loadSpectrumMeta(path: string): Record<string, unknown> {
  const metaPath = path.replace(/\.csv$/, ".meta.json");
  return existsSync(metaPath)
    ? (JSON.parse(readFileSync(metaPath, "utf8")) as Record<string, unknown>)
    : {};
}
