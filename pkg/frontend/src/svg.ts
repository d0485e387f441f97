/** Hand-assembled SVG primitives: linear scales, axes, marks and the
 * shared figure frame with a metadata footer. No DOM required.
 */

export interface Scale {
  (value: number): number;
  domain: [number, number];
  range: [number, number];
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const scale = ((value: number) => r0 + ((value - d0) / span) * (r1 - r0)) as Scale;
  scale.domain = domain;
  scale.range = range;
  return scale;
}

export function ticks(domain: [number, number], count = 5): number[] {
  const [lo, hi] = domain;
  const span = hi - lo || 1;
  const step = Math.pow(10, Math.floor(Math.log10(span / count)));
  const candidates = [step, 2 * step, 5 * step, 10 * step];
  const chosen = candidates.find((s) => span / s <= count) ?? 10 * step;
  const out: number[] = [];
  for (let t = Math.ceil(lo / chosen) * chosen; t <= hi + 1e-12; t += chosen) {
    out.push(Number(t.toPrecision(12)));
  }
  return out;
}

export function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

const fmt = (x: number) => Number(x.toPrecision(6)).toString();

export function polyline(points: Array<[number, number]>, stroke: string, width = 1.5): string {
  const attr = points.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
  return `<polyline fill="none" stroke="${stroke}" stroke-width="${width}" points="${attr}"/>`;
}

export function rect(x: number, y: number, w: number, h: number, fill: string, opacity = 1): string {
  return `<rect x="${fmt(x)}" y="${fmt(y)}" width="${fmt(Math.max(w, 0))}" height="${fmt(
    Math.max(h, 0),
  )}" fill="${fill}" opacity="${opacity}"/>`;
}

export function circle(x: number, y: number, r: number, fill: string, opacity = 1): string {
  return `<circle cx="${fmt(x)}" cy="${fmt(y)}" r="${r}" fill="${fill}" opacity="${opacity}"/>`;
}

export function line(x1: number, y1: number, x2: number, y2: number, stroke: string, width = 1, dash = ""): string {
  const dashAttr = dash ? ` stroke-dasharray="${dash}"` : "";
  return `<line x1="${fmt(x1)}" y1="${fmt(y1)}" x2="${fmt(x2)}" y2="${fmt(y2)}" stroke="${stroke}" stroke-width="${width}"${dashAttr}/>`;
}

export function text(
  x: number,
  y: number,
  content: string,
  options: { size?: number; anchor?: string; fill?: string; rotate?: number } = {},
): string {
  const { size = 11, anchor = "start", fill = "#222", rotate } = options;
  const transform = rotate !== undefined ? ` transform="rotate(${rotate} ${fmt(x)} ${fmt(y)})"` : "";
  return `<text x="${fmt(x)}" y="${fmt(y)}" font-size="${size}" text-anchor="${anchor}" fill="${fill}" font-family="sans-serif"${transform}>${esc(content)}</text>`;
}

export interface AxisSpec {
  x: Scale;
  y: Scale;
  xLabel: string;
  yLabel: string;
}

export function axes({ x, y, xLabel, yLabel }: AxisSpec): string {
  const [x0, x1] = x.range;
  const [y0, y1] = y.range; // y0 = bottom pixel, y1 = top pixel
  const parts: string[] = [];
  parts.push(line(x0, y0, x1, y0, "#444"));
  parts.push(line(x0, y0, x0, y1, "#444"));
  for (const t of ticks(x.domain)) {
    parts.push(line(x(t), y0, x(t), y0 + 4, "#444"));
    parts.push(text(x(t), y0 + 16, String(t), { anchor: "middle", size: 10 }));
  }
  for (const t of ticks(y.domain)) {
    parts.push(line(x0 - 4, y(t), x0, y(t), "#444"));
    parts.push(text(x0 - 7, y(t) + 3, String(t), { anchor: "end", size: 10 }));
  }
  parts.push(text((x0 + x1) / 2, y0 + 32, xLabel, { anchor: "middle" }));
  parts.push(text(x0 - 42, (y0 + y1) / 2, yLabel, { anchor: "middle", rotate: -90 }));
  return parts.join("\n");
}

export interface FigureOptions {
  width: number;
  height: number;
  title: string;
  footer: string;
}

/** Wrap body markup in a complete SVG document with title and footer. */
export function figure(body: string, { width, height, title, footer }: FigureOptions): string {
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`,
    rect(0, 0, width, height, "#ffffff"),
    text(width / 2, 20, title, { anchor: "middle", size: 14 }),
    body,
    text(8, height - 8, footer, { size: 9, fill: "#555" }),
    `</svg>`,
  ].join("\n");
}

/** One-line run-configuration footer embedded in every figure. */
export function metadataFooter(meta: Record<string, unknown>): string {
  const wanted = ["seed", "alpha", "log_base", "distance_mode", "n", "p", "permutation_min"];
  const parts: string[] = [];
  for (const key of wanted) {
    if (meta[key] !== undefined && meta[key] !== null) {
      parts.push(`${key}=${String(meta[key])}`);
    }
  }
  return parts.length > 0 ? parts.join("  ") : "config: unknown";
}
