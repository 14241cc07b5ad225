import init, { generateMesh, solve, sharpness, evenNFor } from "./pkg/circumfem_web.js";

const $ = (id) => document.getElementById(id);
const fmt = (x) => (Math.abs(x) < 1e-3 && x !== 0 ? x.toExponential(4) : x.toFixed(7));

function color(t) {
  // blue -> white -> red
  const c = Math.max(0, Math.min(1, t));
  const r = c < 0.5 ? 2 * c : 1;
  const b = c < 0.5 ? 1 : 2 * (1 - c);
  const g = 1 - Math.abs(2 * c - 1);
  return `rgb(${Math.round(255 * r)},${Math.round(255 * (0.3 + 0.7 * g))},${Math.round(255 * b)})`;
}

function fillRows(table, rows) {
  table.innerHTML = rows.map(([k, v]) => `<tr><th>${k}</th><td>${v}</td></tr>`).join("");
}

function drawMesh(mesh, shade, range, edges) {
  const cv = $("plot");
  const ctx = cv.getContext("2d");
  const pad = 10;
  const s = cv.width - 2 * pad;
  const xy = mesh.coords;
  const tris = mesh.triangles;
  const px = (i) => pad + s * xy[2 * i];
  const py = (i) => cv.height - pad - s * xy[2 * i + 1];
  ctx.clearRect(0, 0, cv.width, cv.height);
  ctx.lineWidth = 0.5;
  ctx.strokeStyle = "rgba(0,0,0,0.5)";
  for (let t = 0; t < tris.length / 3; t++) {
    const [a, b, c] = [tris[3 * t], tris[3 * t + 1], tris[3 * t + 2]];
    ctx.beginPath();
    ctx.moveTo(px(a), py(a));
    ctx.lineTo(px(b), py(b));
    ctx.lineTo(px(c), py(c));
    ctx.closePath();
    ctx.fillStyle = color((shade(t) - range[0]) / (range[1] - range[0] || 1));
    ctx.fill();
    if (edges) ctx.stroke();
  }
  $("legend").textContent = `colour range ${fmt(range[0])} .. ${fmt(range[1])}`;
}

function readMN() {
  const m = parseInt($("m").value, 10);
  const n = parseInt($("n").value, 10);
  return [m, n];
}

function showMesh() {
  $("error").textContent = "";
  try {
    const [m, n] = readMN();
    const mesh = generateMesh(m, n);
    const r = mesh.circumradii;
    const lo = Math.min(...r);
    const hi = Math.max(...r);
    drawMesh(mesh, (t) => r[t], [lo, hi], mesh.elements < 20000);
    fillRows($("stats"), [
      ["elements", mesh.elements],
      ["vertices", mesh.vertices],
      ["edges", mesh.edges],
      ["h", fmt(mesh.h)],
      ["R (max circumradius)", fmt(mesh.r_mesh)],
      ["N/(2M&sup2;) + 1/(2N)", fmt(mesh.r_paper)],
      ["threshold 1/C", fmt(mesh.r_threshold)],
      ["R below threshold", mesh.r_mesh <= mesh.r_threshold ? "yes" : "no"],
    ]);
  } catch (e) {
    $("error").textContent = e.message ?? String(e);
  }
}

function showSolve() {
  $("error").textContent = "";
  try {
    const [m, n] = readMN();
    const mesh = generateMesh(m, n);
    const method = document.querySelector("input[name=method]:checked").value;
    const sol = solve(method, m, n);
    const v = sol.corner_values;
    const mean = (t) => (v[3 * t] + v[3 * t + 1] + v[3 * t + 2]) / 3;
    let hi = 0;
    for (const x of v) hi = Math.max(hi, x);
    drawMesh(mesh, mean, [0, hi], false);
    const label = { p1: "|u - u_h|_1", cr: "broken |u - u_h|_1", rt: "|grad u - p_h|_0" }[method];
    fillRows($("stats"), [
      ["elements", mesh.elements],
      ["h", fmt(mesh.h)],
      ["R", fmt(mesh.r_mesh)],
      [label, fmt(sol.error)],
      ["error / h", fmt(sol.error_per_h)],
      ["error / R", fmt(sol.error_per_r)],
      ["max u_h", fmt(hi)],
      ["max u", fmt(Math.max(...sol.exact_corner_values))],
    ]);
  } catch (e) {
    $("error").textContent = e.message ?? String(e);
  }
}

function showSharpness() {
  const h = Math.pow(10, parseFloat($("h").value));
  $("h-value").textContent = `h = ${h.toPrecision(4)}`;
  const s = sharpness(h);
  fillRows($("sharp"), [
    ["|q - Iq|&sup2;_0", fmt(s.e0_sq)],
    ["(3+h&sup2;)(1+h&sup2;)/(12h)", fmt(s.e0_sq_closed)],
    ["|q - Iq|&sup2;_1", fmt(s.e1_sq)],
    ["2h", fmt(s.e1_sq_closed)],
    ["ratio |q-Iq|_0 / |q-Iq|_1", fmt(s.ratio)],
    ["R / (2&radic;6)", fmt(s.lower_bound)],
    ["R", fmt(s.circumradius)],
    ["max edge flux of Iq", s.max_flux.toExponential(2)],
  ]);
  const cv = $("tri");
  const ctx = cv.getContext("2d");
  ctx.clearRect(0, 0, cv.width, cv.height);
  const sc = Math.min((cv.width - 20) / 2, (cv.height - 20) / Math.max(h, 1e-9));
  const X = (x) => cv.width / 2 + sc * x;
  const Y = (y) => cv.height - 10 - sc * y;
  ctx.beginPath();
  ctx.moveTo(X(1), Y(0));
  ctx.lineTo(X(-1), Y(0));
  ctx.lineTo(X(0), Y(h));
  ctx.closePath();
  ctx.fillStyle = "#cde";
  ctx.fill();
  ctx.stroke();
}

await init();
$("mesh-btn").addEventListener("click", showMesh);
$("solve-btn").addEventListener("click", showSolve);
$("n-from-alpha").addEventListener("click", () => {
  const m = parseInt($("m").value, 10);
  $("n").value = evenNFor(m, parseFloat($("alpha").value));
});
$("h").addEventListener("input", showSharpness);
showMesh();
showSharpness();
