/* tslint:disable */
/* eslint-disable */

export class MeshView {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    edges: number;
    elements: number;
    h: number;
    r_mesh: number;
    r_paper: number;
    r_threshold: number;
    vertices: number;
    readonly circumradii: Float64Array;
    /**
     * Interleaved `x0, y0, x1, y1, ...`.
     */
    readonly coords: Float64Array;
    /**
     * Three vertex indices per element.
     */
    readonly triangles: Uint32Array;
}

export class SharpnessView {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    circumradius: number;
    e0_sq_closed: number;
    e0_sq: number;
    e1_sq_closed: number;
    e1_sq: number;
    lower_bound: number;
    max_flux: number;
    ratio: number;
}

export class SolveView {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    error_per_h: number;
    error_per_r: number;
    error: number;
    /**
     * Discrete solution at the three corners of each element.
     */
    readonly corner_values: Float64Array;
    readonly exact_corner_values: Float64Array;
}

export function evenNFor(m: number, alpha: number): number;

export function generateMesh(m: number, n: number): MeshView;

export function sharpness(h: number): SharpnessView;

/**
 * `method` is one of `p1`, `cr`, `rt`.
 */
export function solve(method: string, m: number, n: number): SolveView;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_get_meshview_edges: (a: number) => number;
    readonly __wbg_get_meshview_elements: (a: number) => number;
    readonly __wbg_get_meshview_h: (a: number) => number;
    readonly __wbg_get_meshview_r_mesh: (a: number) => number;
    readonly __wbg_get_meshview_r_paper: (a: number) => number;
    readonly __wbg_get_meshview_r_threshold: (a: number) => number;
    readonly __wbg_get_meshview_vertices: (a: number) => number;
    readonly __wbg_get_sharpnessview_circumradius: (a: number) => number;
    readonly __wbg_get_sharpnessview_e0_sq: (a: number) => number;
    readonly __wbg_get_sharpnessview_e0_sq_closed: (a: number) => number;
    readonly __wbg_get_sharpnessview_e1_sq: (a: number) => number;
    readonly __wbg_get_sharpnessview_e1_sq_closed: (a: number) => number;
    readonly __wbg_get_sharpnessview_lower_bound: (a: number) => number;
    readonly __wbg_get_sharpnessview_max_flux: (a: number) => number;
    readonly __wbg_get_sharpnessview_ratio: (a: number) => number;
    readonly __wbg_get_solveview_error: (a: number) => number;
    readonly __wbg_get_solveview_error_per_h: (a: number) => number;
    readonly __wbg_get_solveview_error_per_r: (a: number) => number;
    readonly __wbg_meshview_free: (a: number, b: number) => void;
    readonly __wbg_set_meshview_edges: (a: number, b: number) => void;
    readonly __wbg_set_meshview_elements: (a: number, b: number) => void;
    readonly __wbg_set_meshview_h: (a: number, b: number) => void;
    readonly __wbg_set_meshview_r_mesh: (a: number, b: number) => void;
    readonly __wbg_set_meshview_r_paper: (a: number, b: number) => void;
    readonly __wbg_set_meshview_r_threshold: (a: number, b: number) => void;
    readonly __wbg_set_meshview_vertices: (a: number, b: number) => void;
    readonly __wbg_set_sharpnessview_circumradius: (a: number, b: number) => void;
    readonly __wbg_set_sharpnessview_e0_sq: (a: number, b: number) => void;
    readonly __wbg_set_sharpnessview_e0_sq_closed: (a: number, b: number) => void;
    readonly __wbg_set_sharpnessview_e1_sq: (a: number, b: number) => void;
    readonly __wbg_set_sharpnessview_e1_sq_closed: (a: number, b: number) => void;
    readonly __wbg_set_sharpnessview_lower_bound: (a: number, b: number) => void;
    readonly __wbg_set_sharpnessview_max_flux: (a: number, b: number) => void;
    readonly __wbg_set_sharpnessview_ratio: (a: number, b: number) => void;
    readonly __wbg_set_solveview_error: (a: number, b: number) => void;
    readonly __wbg_set_solveview_error_per_h: (a: number, b: number) => void;
    readonly __wbg_set_solveview_error_per_r: (a: number, b: number) => void;
    readonly __wbg_sharpnessview_free: (a: number, b: number) => void;
    readonly __wbg_solveview_free: (a: number, b: number) => void;
    readonly evenNFor: (a: number, b: number) => number;
    readonly generateMesh: (a: number, b: number) => [number, number, number];
    readonly meshview_circumradii: (a: number) => [number, number];
    readonly meshview_coords: (a: number) => [number, number];
    readonly meshview_triangles: (a: number) => [number, number];
    readonly sharpness: (a: number) => [number, number, number];
    readonly solve: (a: number, b: number, c: number, d: number) => [number, number, number];
    readonly solveview_corner_values: (a: number) => [number, number];
    readonly solveview_exact_corner_values: (a: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
