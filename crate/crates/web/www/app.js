import init, { explore, factorize, glue_semigroups } from "./pkg/frobvec_web.js";

const $ = (id) => document.getElementById(id);
const COLORS = ["#ffffff", "#d62728", "#ff7f0e", "#bcbd22", "#2ca02c", "#17becf", "#1f77b4", "#9467bd"];

function show(el, value) {
  if (value.error) {
    el.innerHTML = `<p class="error">${value.error.code}: ${value.error.message}</p>`;
    return false;
  }
  return true;
}

function colorFor(count) {
  return count < COLORS.length ? COLORS[count] : "#444";
}

function drawHeatmap(grid, result) {
  const canvas = $("heat");
  const ctx = canvas.getContext("2d");
  const rows = grid.length;
  const cols = grid[0].length;
  const cell = Math.max(1, Math.floor(canvas.width / cols));
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  for (let y = 0; y < rows; y++) {
    for (let x = 0; x < cols; x++) {
      ctx.fillStyle = colorFor(grid[y][x]);
      // y grows upwards
      ctx.fillRect(x * cell, canvas.height - (y + 1) * cell, cell, cell);
    }
  }
  if (Array.isArray(result)) {
    const [fx, fy] = result.length === 1 ? [result[0], 0] : result;
    if (fx < cols && fy < rows) {
      ctx.strokeStyle = "#000";
      ctx.lineWidth = 2;
      ctx.beginPath();
      ctx.arc(fx * cell + cell / 2, canvas.height - fy * cell - cell / 2, cell + 3, 0, 2 * Math.PI);
      ctx.stroke();
    }
  }
  $("legend").innerHTML = COLORS.map((c, i) => `<span style="background:${c}"></span>${i} `).join("") +
    `<span style="background:#444"></span>${COLORS.length}+`;
}

function runExplore() {
  const out = JSON.parse(explore($("gens").value, +$("p").value, $("order").value, +$("extent").value));
  if (!show($("explore-out"), out)) return;
  const r = out.report;
  const lambda = r.lambda ? ` &Lambda; = (${r.lambda.join(",")}),` : "";
  const cand = r.candidates !== undefined ? ` ${r.candidates} candidate degrees` : "";
  const value = Array.isArray(r.result) ? `(${r.result.join(",")})` : r.result;
  $("explore-out").innerHTML = `<p>F<sub>${r.p}</sub>(S) = <b>${value}</b>,${lambda}${cand}` +
    (out.minimalized ? ` (generators reduced to a minimal set)` : "") + `</p>`;
  drawHeatmap(out.grid, r.result);
}

function runFactorize() {
  const out = JSON.parse(factorize($("gens").value, $("element").value, $("order").value));
  if (!show($("fact-out"), out)) return;
  const rows = out.factorizations.map((f) => `(${f.join(",")})`).join("\n");
  $("fact-out").innerHTML = `<p>${out.count} factorization(s)</p><pre>${rows}</pre>`;
}

function runGlue() {
  const out = JSON.parse(glue_semigroups($("gens").value, +$("d").value, $("gamma").value, +$("p").value, $("order").value));
  if (!show($("glue-out"), out)) return;
  const gens = out.glued.generators.map((g) => `(${g.join(",")})`).join(", ");
  const verdict = out.verdict ? ` (${out.verdict.replaceAll("_", " ")})` : "";
  $("glue-out").innerHTML = `<p>S' = &lang;${gens}&rang;</p>` +
    `<p>F<sub>${$("p").value}</sub>(S') &#x2AAF; (${out.bound.join(",")})${verdict}</p>`;
}

await init();
$("run").addEventListener("click", runExplore);
$("fact").addEventListener("click", runFactorize);
$("glue").addEventListener("click", runGlue);
runExplore();
