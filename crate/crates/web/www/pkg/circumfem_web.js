/* @ts-self-types="./circumfem_web.d.ts" */

export class MeshView {
    static __wrap(ptr) {
        const obj = Object.create(MeshView.prototype);
        obj.__wbg_ptr = ptr;
        MeshViewFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        MeshViewFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_meshview_free(ptr, 0);
    }
    /**
     * @returns {number}
     */
    get edges() {
        const ret = wasm.__wbg_get_meshview_edges(this.__wbg_ptr);
        return ret >>> 0;
    }
    /**
     * @returns {number}
     */
    get elements() {
        const ret = wasm.__wbg_get_meshview_elements(this.__wbg_ptr);
        return ret >>> 0;
    }
    /**
     * @returns {number}
     */
    get h() {
        const ret = wasm.__wbg_get_meshview_h(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get r_mesh() {
        const ret = wasm.__wbg_get_meshview_r_mesh(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get r_paper() {
        const ret = wasm.__wbg_get_meshview_r_paper(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get r_threshold() {
        const ret = wasm.__wbg_get_meshview_r_threshold(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get vertices() {
        const ret = wasm.__wbg_get_meshview_vertices(this.__wbg_ptr);
        return ret >>> 0;
    }
    /**
     * @returns {Float64Array}
     */
    get circumradii() {
        const ret = wasm.meshview_circumradii(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * Interleaved `x0, y0, x1, y1, ...`.
     * @returns {Float64Array}
     */
    get coords() {
        const ret = wasm.meshview_coords(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * Three vertex indices per element.
     * @returns {Uint32Array}
     */
    get triangles() {
        const ret = wasm.meshview_triangles(this.__wbg_ptr);
        var v1 = getArrayU32FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 4, 4);
        return v1;
    }
    /**
     * @param {number} arg0
     */
    set edges(arg0) {
        wasm.__wbg_set_meshview_edges(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set elements(arg0) {
        wasm.__wbg_set_meshview_elements(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set h(arg0) {
        wasm.__wbg_set_meshview_h(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set r_mesh(arg0) {
        wasm.__wbg_set_meshview_r_mesh(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set r_paper(arg0) {
        wasm.__wbg_set_meshview_r_paper(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set r_threshold(arg0) {
        wasm.__wbg_set_meshview_r_threshold(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set vertices(arg0) {
        wasm.__wbg_set_meshview_vertices(this.__wbg_ptr, arg0);
    }
}
if (Symbol.dispose) MeshView.prototype[Symbol.dispose] = MeshView.prototype.free;

export class SharpnessView {
    static __wrap(ptr) {
        const obj = Object.create(SharpnessView.prototype);
        obj.__wbg_ptr = ptr;
        SharpnessViewFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        SharpnessViewFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_sharpnessview_free(ptr, 0);
    }
    /**
     * @returns {number}
     */
    get circumradius() {
        const ret = wasm.__wbg_get_sharpnessview_circumradius(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get e0_sq_closed() {
        const ret = wasm.__wbg_get_sharpnessview_e0_sq_closed(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get e0_sq() {
        const ret = wasm.__wbg_get_sharpnessview_e0_sq(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get e1_sq_closed() {
        const ret = wasm.__wbg_get_sharpnessview_e1_sq_closed(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get e1_sq() {
        const ret = wasm.__wbg_get_sharpnessview_e1_sq(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get lower_bound() {
        const ret = wasm.__wbg_get_sharpnessview_lower_bound(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get max_flux() {
        const ret = wasm.__wbg_get_sharpnessview_max_flux(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get ratio() {
        const ret = wasm.__wbg_get_sharpnessview_ratio(this.__wbg_ptr);
        return ret;
    }
    /**
     * @param {number} arg0
     */
    set circumradius(arg0) {
        wasm.__wbg_set_sharpnessview_circumradius(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set e0_sq_closed(arg0) {
        wasm.__wbg_set_sharpnessview_e0_sq_closed(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set e0_sq(arg0) {
        wasm.__wbg_set_sharpnessview_e0_sq(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set e1_sq_closed(arg0) {
        wasm.__wbg_set_sharpnessview_e1_sq_closed(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set e1_sq(arg0) {
        wasm.__wbg_set_sharpnessview_e1_sq(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set lower_bound(arg0) {
        wasm.__wbg_set_sharpnessview_lower_bound(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set max_flux(arg0) {
        wasm.__wbg_set_sharpnessview_max_flux(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set ratio(arg0) {
        wasm.__wbg_set_sharpnessview_ratio(this.__wbg_ptr, arg0);
    }
}
if (Symbol.dispose) SharpnessView.prototype[Symbol.dispose] = SharpnessView.prototype.free;

export class SolveView {
    static __wrap(ptr) {
        const obj = Object.create(SolveView.prototype);
        obj.__wbg_ptr = ptr;
        SolveViewFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        SolveViewFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_solveview_free(ptr, 0);
    }
    /**
     * @returns {number}
     */
    get error_per_h() {
        const ret = wasm.__wbg_get_solveview_error_per_h(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get error_per_r() {
        const ret = wasm.__wbg_get_solveview_error_per_r(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get error() {
        const ret = wasm.__wbg_get_solveview_error(this.__wbg_ptr);
        return ret;
    }
    /**
     * @param {number} arg0
     */
    set error_per_h(arg0) {
        wasm.__wbg_set_solveview_error_per_h(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set error_per_r(arg0) {
        wasm.__wbg_set_solveview_error_per_r(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set error(arg0) {
        wasm.__wbg_set_solveview_error(this.__wbg_ptr, arg0);
    }
    /**
     * Discrete solution at the three corners of each element.
     * @returns {Float64Array}
     */
    get corner_values() {
        const ret = wasm.solveview_corner_values(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {Float64Array}
     */
    get exact_corner_values() {
        const ret = wasm.solveview_exact_corner_values(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
}
if (Symbol.dispose) SolveView.prototype[Symbol.dispose] = SolveView.prototype.free;

/**
 * @param {number} m
 * @param {number} alpha
 * @returns {number}
 */
export function evenNFor(m, alpha) {
    const ret = wasm.evenNFor(m, alpha);
    return ret >>> 0;
}

/**
 * @param {number} m
 * @param {number} n
 * @returns {MeshView}
 */
export function generateMesh(m, n) {
    const ret = wasm.generateMesh(m, n);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return MeshView.__wrap(ret[0]);
}

/**
 * @param {number} h
 * @returns {SharpnessView}
 */
export function sharpness(h) {
    const ret = wasm.sharpness(h);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return SharpnessView.__wrap(ret[0]);
}

/**
 * `method` is one of `p1`, `cr`, `rt`.
 * @param {string} method
 * @param {number} m
 * @param {number} n
 * @returns {SolveView}
 */
export function solve(method, m, n) {
    const ptr0 = passStringToWasm0(method, wasm.__wbindgen_malloc, wasm.__wbindgen_realloc);
    const len0 = WASM_VECTOR_LEN;
    const ret = wasm.solve(ptr0, len0, m, n);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return SolveView.__wrap(ret[0]);
}
function __wbg_get_imports() {
    const import0 = {
        __proto__: null,
        __wbg_Error_30c8987f7c2ed4e2: function(arg0, arg1) {
            const ret = Error(getStringFromWasm0(arg0, arg1));
            return ret;
        },
        __wbg___wbindgen_throw_41e9ee4f547fc59a: function(arg0, arg1) {
            throw new Error(getStringFromWasm0(arg0, arg1));
        },
        __wbindgen_init_externref_table: function() {
            const table = wasm.__wbindgen_externrefs;
            const offset = table.grow(4);
            table.set(0, undefined);
            table.set(offset + 0, undefined);
            table.set(offset + 1, null);
            table.set(offset + 2, true);
            table.set(offset + 3, false);
        },
    };
    return {
        __proto__: null,
        "./circumfem_web_bg.js": import0,
    };
}

const MeshViewFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_meshview_free(ptr, 1));
const SharpnessViewFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_sharpnessview_free(ptr, 1));
const SolveViewFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_solveview_free(ptr, 1));

function getArrayF64FromWasm0(ptr, len) {
    ptr = ptr >>> 0;
    return getFloat64ArrayMemory0().subarray(ptr / 8, ptr / 8 + len);
}

function getArrayU32FromWasm0(ptr, len) {
    ptr = ptr >>> 0;
    return getUint32ArrayMemory0().subarray(ptr / 4, ptr / 4 + len);
}

let cachedFloat64ArrayMemory0 = null;
function getFloat64ArrayMemory0() {
    if (cachedFloat64ArrayMemory0 === null || cachedFloat64ArrayMemory0.byteLength === 0) {
        cachedFloat64ArrayMemory0 = new Float64Array(wasm.memory.buffer);
    }
    return cachedFloat64ArrayMemory0;
}

function getStringFromWasm0(ptr, len) {
    return decodeText(ptr >>> 0, len);
}

let cachedUint32ArrayMemory0 = null;
function getUint32ArrayMemory0() {
    if (cachedUint32ArrayMemory0 === null || cachedUint32ArrayMemory0.byteLength === 0) {
        cachedUint32ArrayMemory0 = new Uint32Array(wasm.memory.buffer);
    }
    return cachedUint32ArrayMemory0;
}

let cachedUint8ArrayMemory0 = null;
function getUint8ArrayMemory0() {
    if (cachedUint8ArrayMemory0 === null || cachedUint8ArrayMemory0.byteLength === 0) {
        cachedUint8ArrayMemory0 = new Uint8Array(wasm.memory.buffer);
    }
    return cachedUint8ArrayMemory0;
}

function passStringToWasm0(arg, malloc, realloc) {
    if (realloc === undefined) {
        const buf = cachedTextEncoder.encode(arg);
        const ptr = malloc(buf.length, 1) >>> 0;
        getUint8ArrayMemory0().subarray(ptr, ptr + buf.length).set(buf);
        WASM_VECTOR_LEN = buf.length;
        return ptr;
    }

    let len = arg.length;
    let ptr = malloc(len, 1) >>> 0;

    const mem = getUint8ArrayMemory0();

    let offset = 0;

    for (; offset < len; offset++) {
        const code = arg.charCodeAt(offset);
        if (code > 0x7F) break;
        mem[ptr + offset] = code;
    }
    if (offset !== len) {
        if (offset !== 0) {
            arg = arg.slice(offset);
        }
        ptr = realloc(ptr, len, len = offset + arg.length * 3, 1) >>> 0;
        const view = getUint8ArrayMemory0().subarray(ptr + offset, ptr + len);
        const ret = cachedTextEncoder.encodeInto(arg, view);

        offset += ret.written;
        ptr = realloc(ptr, len, offset, 1) >>> 0;
    }

    WASM_VECTOR_LEN = offset;
    return ptr;
}

function takeFromExternrefTable0(idx) {
    const value = wasm.__wbindgen_externrefs.get(idx);
    wasm.__externref_table_dealloc(idx);
    return value;
}

let cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
cachedTextDecoder.decode();
const MAX_SAFARI_DECODE_BYTES = 2146435072;
let numBytesDecoded = 0;
function decodeText(ptr, len) {
    numBytesDecoded += len;
    if (numBytesDecoded >= MAX_SAFARI_DECODE_BYTES) {
        cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
        cachedTextDecoder.decode();
        numBytesDecoded = len;
    }
    return cachedTextDecoder.decode(getUint8ArrayMemory0().subarray(ptr, ptr + len));
}

const cachedTextEncoder = new TextEncoder();

if (!('encodeInto' in cachedTextEncoder)) {
    cachedTextEncoder.encodeInto = function (arg, view) {
        const buf = cachedTextEncoder.encode(arg);
        view.set(buf);
        return {
            read: arg.length,
            written: buf.length
        };
    };
}

let WASM_VECTOR_LEN = 0;

let wasmModule, wasmInstance, wasm;
function __wbg_finalize_init(instance, module) {
    wasmInstance = instance;
    wasm = instance.exports;
    wasmModule = module;
    cachedFloat64ArrayMemory0 = null;
    cachedUint32ArrayMemory0 = null;
    cachedUint8ArrayMemory0 = null;
    wasm.__wbindgen_start();
    return wasm;
}

async function __wbg_load(module, imports) {
    if (typeof Response === 'function' && module instanceof Response) {
        if (!module.ok) {
            throw new Error(`failed to fetch Wasm: ${module.status} ${module.statusText} fetching '${module.url}'`);
        }

        if (typeof WebAssembly.instantiateStreaming === 'function') {
            try {
                return await WebAssembly.instantiateStreaming(module, imports);
            } catch (e) {
                const validResponse = expectedResponseType(module.type);

                if (validResponse && module.headers.get('Content-Type') !== 'application/wasm') {
                    console.warn("`WebAssembly.instantiateStreaming` failed because your server does not serve Wasm with `application/wasm` MIME type. Falling back to `WebAssembly.instantiate` which is slower. Original error:\n", e);

                } else { throw e; }
            }
        }

        const bytes = await module.arrayBuffer();
        return await WebAssembly.instantiate(bytes, imports);
    } else {
        const instance = await WebAssembly.instantiate(module, imports);

        if (instance instanceof WebAssembly.Instance) {
            return { instance, module };
        } else {
            return instance;
        }
    }

    function expectedResponseType(type) {
        switch (type) {
            case 'basic': case 'cors': case 'default': return true;
        }
        return false;
    }
}

function initSync(module) {
    if (wasm !== undefined) return wasm;


    if (module !== undefined) {
        if (Object.getPrototypeOf(module) === Object.prototype) {
            ({module} = module)
        } else {
            console.warn('using deprecated parameters for `initSync()`; pass a single object instead')
        }
    }

    const imports = __wbg_get_imports();
    if (!(module instanceof WebAssembly.Module)) {
        module = new WebAssembly.Module(module);
    }
    const instance = new WebAssembly.Instance(module, imports);
    return __wbg_finalize_init(instance, module);
}

async function __wbg_init(module_or_path) {
    if (wasm !== undefined) return wasm;


    if (module_or_path !== undefined) {
        if (Object.getPrototypeOf(module_or_path) === Object.prototype) {
            ({module_or_path} = module_or_path)
        } else {
            console.warn('using deprecated parameters for the initialization function; pass a single object instead')
        }
    }

    if (module_or_path === undefined) {
        module_or_path = new URL('circumfem_web_bg.wasm', import.meta.url);
    }
    const imports = __wbg_get_imports();

    if (typeof module_or_path === 'string' || (typeof Request === 'function' && module_or_path instanceof Request) || (typeof URL === 'function' && module_or_path instanceof URL)) {
        module_or_path = fetch(module_or_path);
    }

    const { instance, module } = await __wbg_load(await module_or_path, imports);

    return __wbg_finalize_init(instance, module);
}

export { initSync, __wbg_init as default };
