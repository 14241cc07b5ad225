/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_get_meshview_edges: (a: number) => number;
export const __wbg_get_meshview_elements: (a: number) => number;
export const __wbg_get_meshview_h: (a: number) => number;
export const __wbg_get_meshview_r_mesh: (a: number) => number;
export const __wbg_get_meshview_r_paper: (a: number) => number;
export const __wbg_get_meshview_r_threshold: (a: number) => number;
export const __wbg_get_meshview_vertices: (a: number) => number;
export const __wbg_get_sharpnessview_circumradius: (a: number) => number;
export const __wbg_get_sharpnessview_e0_sq: (a: number) => number;
export const __wbg_get_sharpnessview_e0_sq_closed: (a: number) => number;
export const __wbg_get_sharpnessview_e1_sq: (a: number) => number;
export const __wbg_get_sharpnessview_e1_sq_closed: (a: number) => number;
export const __wbg_get_sharpnessview_lower_bound: (a: number) => number;
export const __wbg_get_sharpnessview_max_flux: (a: number) => number;
export const __wbg_get_sharpnessview_ratio: (a: number) => number;
export const __wbg_get_solveview_error: (a: number) => number;
export const __wbg_get_solveview_error_per_h: (a: number) => number;
export const __wbg_get_solveview_error_per_r: (a: number) => number;
export const __wbg_meshview_free: (a: number, b: number) => void;
export const __wbg_set_meshview_edges: (a: number, b: number) => void;
export const __wbg_set_meshview_elements: (a: number, b: number) => void;
export const __wbg_set_meshview_h: (a: number, b: number) => void;
export const __wbg_set_meshview_r_mesh: (a: number, b: number) => void;
export const __wbg_set_meshview_r_paper: (a: number, b: number) => void;
export const __wbg_set_meshview_r_threshold: (a: number, b: number) => void;
export const __wbg_set_meshview_vertices: (a: number, b: number) => void;
export const __wbg_set_sharpnessview_circumradius: (a: number, b: number) => void;
export const __wbg_set_sharpnessview_e0_sq: (a: number, b: number) => void;
export const __wbg_set_sharpnessview_e0_sq_closed: (a: number, b: number) => void;
export const __wbg_set_sharpnessview_e1_sq: (a: number, b: number) => void;
export const __wbg_set_sharpnessview_e1_sq_closed: (a: number, b: number) => void;
export const __wbg_set_sharpnessview_lower_bound: (a: number, b: number) => void;
export const __wbg_set_sharpnessview_max_flux: (a: number, b: number) => void;
export const __wbg_set_sharpnessview_ratio: (a: number, b: number) => void;
export const __wbg_set_solveview_error: (a: number, b: number) => void;
export const __wbg_set_solveview_error_per_h: (a: number, b: number) => void;
export const __wbg_set_solveview_error_per_r: (a: number, b: number) => void;
export const __wbg_sharpnessview_free: (a: number, b: number) => void;
export const __wbg_solveview_free: (a: number, b: number) => void;
export const evenNFor: (a: number, b: number) => number;
export const generateMesh: (a: number, b: number) => [number, number, number];
export const meshview_circumradii: (a: number) => [number, number];
export const meshview_coords: (a: number) => [number, number];
export const meshview_triangles: (a: number) => [number, number];
export const sharpness: (a: number) => [number, number, number];
export const solve: (a: number, b: number, c: number, d: number) => [number, number, number];
export const solveview_corner_values: (a: number) => [number, number];
export const solveview_exact_corner_values: (a: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_start: () => void;
