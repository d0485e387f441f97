/** Colour helpers: the two-series palette and the HSV mapping used by the
 * qubit colour-spectrum figure (hue = p0 scaled to [0, 360), saturation =
 * p+, value = p+i).
 */

export const OCHRE = "#cc7722";
export const BLACK = "#111111";
export const SERIES = [OCHRE, BLACK];

export function hsvToRgb(h: number, s: number, v: number): [number, number, number] {
  const c = v * s;
  const hp = (((h % 360) + 360) % 360) / 60;
  const x = c * (1 - Math.abs((hp % 2) - 1));
  let rgb: [number, number, number];
  if (hp < 1) rgb = [c, x, 0];
  else if (hp < 2) rgb = [x, c, 0];
  else if (hp < 3) rgb = [0, c, x];
  else if (hp < 4) rgb = [0, x, c];
  else if (hp < 5) rgb = [x, 0, c];
  else rgb = [c, 0, x];
  const m = v - c;
  return [rgb[0] + m, rgb[1] + m, rgb[2] + m];
}

export function rgbHex([r, g, b]: [number, number, number]): string {
  const channel = (u: number) =>
    Math.max(0, Math.min(255, Math.round(u * 255)))
      .toString(16)
      .padStart(2, "0");
  return `#${channel(r)}${channel(g)}${channel(b)}`;
}

/** Map a (p0, p+, p+i) occupation triple to a pixel colour. */
export function colourTriple(p0: number, pplus: number, pplusi: number): string {
  for (const [name, value] of [["p0", p0], ["pplus", pplus], ["pplusi", pplusi]] as const) {
    if (!(value >= 0 && value <= 1)) {
      throw new Error(`${name}=${value} outside [0, 1]`);
    }
  }
  return rgbHex(hsvToRgb(p0 * 360, pplus, pplusi));
}

/** Sequential map for heatmap cells (dark blue -> yellow). */
export function sequential(t: number): string {
  const clamped = Math.max(0, Math.min(1, t));
  return rgbHex(hsvToRgb(240 - 195 * clamped, 0.75, 0.35 + 0.6 * clamped));
}
