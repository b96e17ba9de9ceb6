// Expects the wasm-bindgen output (`--target web`) in ./pkg.
import init, { familyTable, checkPair, decomposePair } from "./pkg/uninorm_wasm.js";

const $ = (id) => document.getElementById(id);

function shade(v, n) {
  const t = n === 0 ? 0 : v / n;
  return `hsl(${220 - 180 * t}, 70%, ${88 - 30 * t}%)`;
}

// marks: Map from "x,y" to a CSS class.
function render(title, view, marks = new Map()) {
  const fig = document.createElement("figure");
  const cap = document.createElement("figcaption");
  const tags = [view.idempotent && "idempotent", view.locally_internal && "locally internal"].filter(Boolean);
  cap.textContent = `${title}: L_${view.scale}, e = ${view.neutral}${tags.length ? ", " + tags.join(", ") : ""}`;
  fig.append(cap);
  const table = document.createElement("table");
  table.className = "op";
  const head = table.insertRow();
  head.append(document.createElement("th"));
  for (let y = 0; y <= view.scale; y++) {
    const th = document.createElement("th");
    th.textContent = y;
    head.append(th);
  }
  view.rows.forEach((row, x) => {
    const tr = table.insertRow();
    const th = document.createElement("th");
    th.textContent = x;
    tr.append(th);
    row.forEach((v, y) => {
      const td = tr.insertCell();
      td.textContent = v;
      td.style.background = shade(v, view.scale);
      td.className = view.regions[x][y];
      const mark = marks.get(`${x},${y}`);
      if (mark) td.classList.add(mark);
    });
  });
  fig.append(table);
  return fig;
}

function show(figs, text = "", error = false) {
  $("tables").replaceChildren(...figs);
  $("status").textContent = text;
  $("status").className = error ? "error" : "";
}

function guarded(f) {
  return () => {
    try {
      f();
    } catch (e) {
      show([], String(e), true);
    }
  };
}

function onShow() {
  const a = JSON.parse(familyTable($("u1").value));
  const b = JSON.parse(familyTable($("u2").value));
  show([render("u1", a), render("u2", b)]);
}

function onCheck() {
  const r = JSON.parse(checkPair($("u1").value, $("u2").value));
  const m1 = new Map();
  const m2 = new Map();
  let text = r.summary;
  const v = r.violation;
  if (v && v.witness.length === 3) {
    const [x, y, z] = v.witness;
    text += `\nwitness x=${x}, y=${y}, z=${z}: U1(x, U2(y, z)) = ${v.values[0]} but U2(U1(x, y), U1(x, z)) = ${v.values[1]}`;
    m2.set(`${y},${z}`, "hit");
    for (const w of [y, z]) m1.set(`${x},${w}`, "hit");
  }
  show([render("u1", r.u1, m1), render("u2", r.u2, m2)], text);
}

function onDecompose() {
  const d = JSON.parse(decomposePair($("u1").value, $("u2").value));
  const figs = [render("inner uninorm", d.inner), render("boundary operator", d.boundary)];
  if (d.residual) figs.push(render("residual", d.residual));
  const second = d.second.length ? d.second.map(([x, y]) => `(${x},${y})`).join(" ") : "none";
  show(figs, `${d.case}: ${d.points} selection points, second argument taken at ${second}`);
}

await init();
$("show").onclick = guarded(onShow);
$("check").onclick = guarded(onCheck);
$("decompose").onclick = guarded(onDecompose);
guarded(onShow)();
