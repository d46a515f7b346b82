import init, { petersen_power, lift_demo, analyze } from "./pkg/regraph_web.js";

const SVG = "http://www.w3.org/2000/svg";
const PALETTE = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b"];

let current = null; // last successful summary

function el(tag, attrs = {}, parent) {
  const node = document.createElementNS(SVG, tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (parent) parent.appendChild(node);
  return node;
}

// outer pentagon 0..4 and inner pentagram 5..9 for order 10, a circle otherwise
function layout(n) {
  const at = (i, k, radius, turn = 0) => {
    const a = -Math.PI / 2 + (2 * Math.PI * i) / k + turn;
    return [radius * Math.cos(a), radius * Math.sin(a)];
  };
  if (n === 10) {
    return [...Array(10).keys()].map((v) => (v < 5 ? at(v, 5, 190) : at(v - 5, 5, 90)));
  }
  return [...Array(n).keys()].map((v) => at(v, n, 190));
}

// edge ids in file order, as endpoint pairs
function edgeList(mgf) {
  return mgf
    .split("\n")
    .filter((l) => l.startsWith("e "))
    .map((l) => l.split(/\s+/).slice(1, 3).map(Number));
}

function draw(summary, highlight = null, marked = new Set()) {
  const svg = document.getElementById("canvas");
  svg.replaceChildren();
  const { n, edges } = summary.drawing;
  const pos = layout(n);
  // colour of each (u, v, copy) slot when a matching family is highlighted
  const slotColour = new Map();
  if (highlight) {
    const ends = edgeList(summary.mgf);
    const used = new Map();
    highlight.forEach((pm, c) => {
      for (const e of pm) {
        const [u, v] = ends[e];
        const key = `${Math.min(u, v)}-${Math.max(u, v)}`;
        const copy = used.get(key) ?? 0;
        used.set(key, copy + 1);
        slotColour.set(`${key}-${copy}`, PALETTE[c % PALETTE.length]);
      }
    });
  }
  for (const [u, v, k] of edges) {
    const [x1, y1] = pos[u];
    const [x2, y2] = pos[v];
    const [dx, dy] = [x2 - x1, y2 - y1];
    const len = Math.hypot(dx, dy) || 1;
    for (let i = 0; i < k; i++) {
      const bend = (i - (k - 1) / 2) * 18;
      const cx = (x1 + x2) / 2 - (dy / len) * bend;
      const cy = (y1 + y2) / 2 + (dx / len) * bend;
      const colour = slotColour.get(`${u}-${v}-${i}`) ?? "#888";
      el("path", {
        d: `M ${x1} ${y1} Q ${cx} ${cy} ${x2} ${y2}`,
        fill: "none",
        stroke: colour,
        "stroke-width": highlight && colour !== "#888" ? 3 : 1.5,
      }, svg);
    }
  }
  pos.forEach(([x, y], v) => {
    el("circle", { cx: x, cy: y, r: 11, fill: marked.has(v) ? "#ffd54f" : "#fff", stroke: "#333" }, svg);
    const t = el("text", { x, y: y + 4, "text-anchor": "middle", "font-size": 11 }, svg);
    t.textContent = v;
  });
}

function show(result) {
  const out = document.getElementById("summary");
  const chips = document.getElementById("chips");
  chips.replaceChildren();
  if (result.error) {
    out.textContent = result.error;
    out.className = "error";
    return;
  }
  out.className = "";
  current = result;
  const { drawing, mgf, matchings, ...facts } = result;
  out.textContent = JSON.stringify(facts, null, 1);
  document.getElementById("mgf").value = mgf;
  const witness = new Set(result.witness ?? []);
  draw(result, null, witness);
  if (Array.isArray(matchings) && matchings.length > 0) {
    const all = document.createElement("button");
    all.textContent = `show ${matchings.length} disjoint perfect matchings`;
    all.onclick = () => draw(result, matchings, witness);
    chips.appendChild(all);
  }
  const plain = document.createElement("button");
  plain.textContent = "plain";
  plain.onclick = () => draw(result, null, witness);
  chips.appendChild(plain);
}

function countsInput() {
  const box = document.getElementById("counts");
  for (let i = 1; i <= 6; i++) {
    const label = document.createElement("label");
    label.textContent = `n${i} `;
    const input = document.createElement("input");
    input.type = "number";
    input.min = 0;
    input.max = 6;
    input.value = i === 1 ? 1 : 0;
    input.id = `n${i}`;
    label.appendChild(input);
    box.appendChild(label);
  }
}

async function main() {
  await init();
  countsInput();
  document.getElementById("build").onclick = () => {
    const counts = [1, 2, 3, 4, 5, 6].map((i) => document.getElementById(`n${i}`).value || "0");
    show(JSON.parse(petersen_power(counts.join(","))));
  };
  document.getElementById("analyze").onclick = () => {
    show(JSON.parse(analyze(document.getElementById("mgf").value)));
  };
  document.getElementById("lift").onclick = () => {
    if (!current) return;
    const r = Number(document.getElementById("lift-r").value);
    const res = JSON.parse(lift_demo(current.mgf, document.getElementById("contract").value, r));
    const info = document.getElementById("lift-info");
    if (res.error) {
      info.textContent = res.error;
      info.className = "error";
      return;
    }
    info.className = "";
    info.textContent = `${res.lifts} lift(s); contracted vertex is ${res.after.n - 1} if it survived`;
    show(res.after);
  };
  show(JSON.parse(petersen_power("0,0,0,0,0,0")));
}

main();
