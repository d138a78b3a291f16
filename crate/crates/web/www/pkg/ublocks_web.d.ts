/* tslint:disable */
/* eslint-disable */

/**
 * A unipotent character of degree divisible by `q` in the principal
 * `p`-block, by both the explicit and the exhaustive route.
 */
export function block_witness(series: string, n: number, r: bigint, p: bigint, q: bigint): string;

/**
 * Core, weight, quotient and hook lengths of a partition such as `[4,2,1]`.
 */
export function partition_info(text: string, e: number): string;

/**
 * Core, cocore, twists and (for `r > 0`) degree of a symbol such as `(1,2|0)`.
 */
export function symbol_info(text: string, e: number, r: bigint): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly block_witness: (a: number, b: number, c: number, d: bigint, e: bigint, f: bigint) => [number, number, number, number];
    readonly partition_info: (a: number, b: number, c: number) => [number, number, number, number];
    readonly symbol_info: (a: number, b: number, c: number, d: bigint) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
