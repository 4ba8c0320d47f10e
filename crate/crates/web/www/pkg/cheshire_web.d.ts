/* tslint:disable */
/* eslint-disable */

/**
 * Post-selected pointer intensity next to the reference-port intensity.
 */
export class PointerView {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly centroid: number;
    /**
     * `int y I_f dy / int I_w dy`; NaN for the H-polariser variant.
     */
    readonly first_moment: number;
    readonly intensity: Float64Array;
    readonly probability: number;
    readonly reference: Float64Array;
    readonly reference_centroid: number;
    readonly ys: Float64Array;
}

/**
 * Seeded photon-counting scan over the input tilt.
 */
export class ScanView {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly deltas: Float64Array;
    readonly ratio_closed: Float64Array;
    readonly ratio_empirical: Float64Array;
    readonly stderr: Float64Array;
    /**
     * Mirror present vs absent, in standard errors.
     */
    readonly z: Float64Array;
}

/**
 * sigma_x weak value sampled over the post-selection angle.
 */
export class WeakValueCurve {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly analytic: Float64Array;
    readonly betas: Float64Array;
    readonly large_n: Float64Array;
    readonly simulated: Float64Array;
}

/**
 * `seed` arrives as a double from JavaScript and is truncated.
 */
export function perturb_scan(half_cycles: number, mu: number, delta_max: number, points: number, shots: number, seed: number): ScanView;

export function pointer_profile(half_cycles: number, mirror_present: boolean, a: number, w0: number, beta: number, h_polariser: boolean, samples: number): PointerView;

export function weak_value_curve(half_cycles: number, mirror_present: boolean, beta_max: number, points: number): WeakValueCurve;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_pointerview_free: (a: number, b: number) => void;
    readonly __wbg_scanview_free: (a: number, b: number) => void;
    readonly __wbg_weakvaluecurve_free: (a: number, b: number) => void;
    readonly perturb_scan: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
    readonly pointer_profile: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number];
    readonly pointerview_centroid: (a: number) => number;
    readonly pointerview_first_moment: (a: number) => number;
    readonly pointerview_intensity: (a: number) => [number, number];
    readonly pointerview_probability: (a: number) => number;
    readonly pointerview_reference: (a: number) => [number, number];
    readonly pointerview_reference_centroid: (a: number) => number;
    readonly pointerview_ys: (a: number) => [number, number];
    readonly scanview_deltas: (a: number) => [number, number];
    readonly scanview_ratio_closed: (a: number) => [number, number];
    readonly scanview_ratio_empirical: (a: number) => [number, number];
    readonly scanview_stderr: (a: number) => [number, number];
    readonly scanview_z: (a: number) => [number, number];
    readonly weak_value_curve: (a: number, b: number, c: number, d: number) => [number, number, number];
    readonly weakvaluecurve_analytic: (a: number) => [number, number];
    readonly weakvaluecurve_betas: (a: number) => [number, number];
    readonly weakvaluecurve_large_n: (a: number) => [number, number];
    readonly weakvaluecurve_simulated: (a: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
