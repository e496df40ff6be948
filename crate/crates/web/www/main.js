import init, { radius_curve, run_trial, hardness } from "./pkg/see_web.js";

const FAMILIES = ["AllWorse", "UniqueQualified", "OneQuarter", "HalfGood", "AllGood", "Linear"];
const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function fillFamilies(sel, pick) {
  for (const f of FAMILIES) sel.add(new Option(f, f, false, f === pick));
}

function fmt(v) {
  if (v === null) return "∞ / n.a.";
  return Number.isInteger(v) ? String(v) : v.toPrecision(6);
}

function axes(ctx, w, h, pad) {
  ctx.clearRect(0, 0, w, h);
  ctx.strokeStyle = "#999";
  ctx.beginPath();
  ctx.moveTo(pad, pad);
  ctx.lineTo(pad, h - pad);
  ctx.lineTo(w - pad, h - pad);
  ctx.stroke();
}

function plotRadius() {
  const canvas = $("r-canvas");
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  const pad = 40;
  try {
    const c = JSON.parse(radius_curve(num("r-delta"), num("r-tmax"), 200));
    const lx = c.t.map(Math.log10);
    const ymax = Math.max(...c.radius, ...c.union_width);
    const x = (v) => pad + (v / lx[lx.length - 1]) * (w - 2 * pad);
    const y = (v) => h - pad - (v / ymax) * (h - 2 * pad);
    axes(ctx, w, h, pad);
    const line = (ys, color) => {
      ctx.strokeStyle = color;
      ctx.beginPath();
      ys.forEach((v, i) => (i ? ctx.lineTo(x(lx[i]), y(v)) : ctx.moveTo(x(lx[i]), y(v))));
      ctx.stroke();
    };
    line(c.radius, "#1565c0");
    line(c.union_width, "#c62828");
    ctx.fillStyle = "#222";
    ctx.fillText(`${ymax.toFixed(3)}`, 4, pad);
    ctx.fillText("log10 t →", w - pad - 50, h - pad + 16);
    ctx.fillStyle = "#1565c0";
    ctx.fillText("dyadic radius U(t, δ)", w - 220, pad);
    ctx.fillStyle = "#c62828";
    ctx.fillText("baseline width W(t, δ)", w - 220, pad + 14);
    $("r-msg").textContent = "";
  } catch (e) {
    $("r-msg").innerHTML = `<span class="err">${e}</span>`;
  }
}

function runTrial() {
  const canvas = $("t-canvas");
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  const pad = 30;
  try {
    const r = JSON.parse(run_trial($("t-family").value, num("t-k"), num("t-delta"), $("t-algo").value, num("t-seed")));
    const k = r.means.length;
    const totals = r.per_arm_ee.map((v, i) => v + r.per_arm_et[i]);
    const top = Math.max(...totals, 1);
    const bw = (w - 2 * pad) / k;
    axes(ctx, w, h, pad);
    for (let i = 0; i < k; i++) {
      const x0 = pad + i * bw + 1;
      const hee = (r.per_arm_ee[i] / top) * (h - 2 * pad);
      const het = (r.per_arm_et[i] / top) * (h - 2 * pad);
      ctx.fillStyle = r.means[i] > r.threshold ? "#2e7d32" : "#9e9e9e";
      ctx.fillRect(x0, h - pad - hee, bw - 2, hee);
      ctx.fillStyle = "#f9a825";
      ctx.fillRect(x0, h - pad - hee - het, bw - 2, het);
    }
    ctx.fillStyle = "#222";
    ctx.fillText(`pulls per arm (max ${top}); green/grey exploration, yellow exploitation`, pad, 14);
    $("t-out").textContent =
      `verdict ${r.verdict} (${r.correct ? "correct" : "wrong"})\n` +
      `pulls ${r.pulls_total} = ${r.pulls_ee} exploration + ${r.pulls_et} exploitation, phases ${r.phases}`;
  } catch (e) {
    $("t-out").innerHTML = `<span class="err">${e}</span>`;
  }
}

function showHardness() {
  try {
    const v = JSON.parse(hardness($("h-family").value, num("h-k"), num("h-delta")));
    $("h-out").textContent = Object.entries(v)
      .map(([k, x]) => `${k.padEnd(28)} ${fmt(x)}`)
      .join("\n");
  } catch (e) {
    $("h-out").innerHTML = `<span class="err">${e}</span>`;
  }
}

await init();
fillFamilies($("t-family"), "UniqueQualified");
fillFamilies($("h-family"), "AllWorse");
$("r-go").onclick = plotRadius;
$("t-go").onclick = runTrial;
$("h-go").onclick = showHardness;
plotRadius();
