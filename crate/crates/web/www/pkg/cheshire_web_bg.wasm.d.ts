/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_pointerview_free: (a: number, b: number) => void;
export const __wbg_scanview_free: (a: number, b: number) => void;
export const __wbg_weakvaluecurve_free: (a: number, b: number) => void;
export const perturb_scan: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
export const pointer_profile: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number];
export const pointerview_centroid: (a: number) => number;
export const pointerview_first_moment: (a: number) => number;
export const pointerview_intensity: (a: number) => [number, number];
export const pointerview_probability: (a: number) => number;
export const pointerview_reference: (a: number) => [number, number];
export const pointerview_reference_centroid: (a: number) => number;
export const pointerview_ys: (a: number) => [number, number];
export const scanview_deltas: (a: number) => [number, number];
export const scanview_ratio_closed: (a: number) => [number, number];
export const scanview_ratio_empirical: (a: number) => [number, number];
export const scanview_stderr: (a: number) => [number, number];
export const scanview_z: (a: number) => [number, number];
export const weak_value_curve: (a: number, b: number, c: number, d: number) => [number, number, number];
export const weakvaluecurve_analytic: (a: number) => [number, number];
export const weakvaluecurve_betas: (a: number) => [number, number];
export const weakvaluecurve_large_n: (a: number) => [number, number];
export const weakvaluecurve_simulated: (a: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
