// Drives the demo page. Build the wasm package into www/pkg first:
//   wasm-pack build crates/wasm --target web --out-dir www/pkg
import init, { curve_json, solve_gnp_json, first_moment_profile_json } from "./pkg/diagdist_wasm.js";

const REGIME_COLORS = {
  "min-degree": "#2458a6",
  "plateau": "#b05c12",
  "pair": "#1f7a43",
};

let curveData = null;
const solvedPoints = [];

function plotCurve() {
  const canvas = document.getElementById("curve");
  const ctx = canvas.getContext("2d");
  const { width: W, height: H } = canvas;
  const pad = { left: 54, right: 16, top: 14, bottom: 36 };
  const yMax = 0.26;
  const x = (p) => pad.left + p * (W - pad.left - pad.right);
  const y = (v) => H - pad.bottom - (Math.min(v, yMax) / yMax) * (H - pad.top - pad.bottom);

  ctx.clearRect(0, 0, W, H);
  ctx.strokeStyle = "#aab7c4";
  ctx.lineWidth = 1;
  ctx.strokeRect(pad.left, pad.top, W - pad.left - pad.right, H - pad.top - pad.bottom);

  ctx.fillStyle = "#51606e";
  ctx.font = "12px system-ui";
  ctx.textAlign = "center";
  for (let i = 0; i <= 10; i++) {
    const p = i / 10;
    ctx.fillText(p.toFixed(1), x(p), H - pad.bottom + 16);
  }
  ctx.fillText("p", x(0.5), H - 6);
  ctx.textAlign = "right";
  for (let v = 0; v <= yMax + 1e-9; v += 0.05) {
    ctx.fillText(v.toFixed(2), pad.left - 6, y(v) + 4);
  }
  ctx.save();
  ctx.translate(14, (pad.top + H - pad.bottom) / 2);
  ctx.rotate(-Math.PI / 2);
  ctx.textAlign = "center";
  ctx.fillText("f/n", 0, 0);
  ctx.restore();

  // dashed guides at the plateau height and its endpoints
  ctx.setLineDash([4, 4]);
  ctx.strokeStyle = "#c9b18f";
  ctx.beginPath();
  ctx.moveTo(x(0), y(curveData.lambda0));
  ctx.lineTo(x(1), y(curveData.lambda0));
  ctx.stroke();
  for (const px of [curveData.lambda0, curveData.p0]) {
    ctx.beginPath();
    ctx.moveTo(x(px), y(0));
    ctx.lineTo(x(px), y(yMax));
    ctx.stroke();
  }
  ctx.setLineDash([]);
  ctx.fillStyle = "#8a6d3b";
  ctx.textAlign = "left";
  ctx.fillText("λ₀", x(curveData.lambda0) + 4, pad.top + 12);
  ctx.fillText("p₀", x(curveData.p0) + 4, pad.top + 12);
  ctx.fillText("λ₀ = " + curveData.lambda0.toFixed(6), pad.left + 6, y(curveData.lambda0) - 6);

  // the curve itself, colored per regime
  let prev = null;
  for (const pt of curveData.curve) {
    if (prev) {
      ctx.strokeStyle = REGIME_COLORS[pt.regime];
      ctx.lineWidth = 2.2;
      ctx.beginPath();
      ctx.moveTo(x(prev.p), y(prev.fhat));
      ctx.lineTo(x(pt.p), y(pt.fhat));
      ctx.stroke();
    }
    prev = pt;
  }

  // solved instances
  for (const pt of solvedPoints) {
    ctx.fillStyle = "#c02626";
    ctx.beginPath();
    ctx.arc(x(pt.p), y(pt.f_over_n), 4, 0, 2 * Math.PI);
    ctx.fill();
  }
}

function runSolve() {
  const n = Number(document.getElementById("solve-n").value);
  const p = Number(document.getElementById("solve-p").value);
  const seed = Number(document.getElementById("solve-seed").value);
  const out = document.getElementById("solve-out");
  const result = JSON.parse(solve_gnp_json(n, p, seed, 200));
  if (result.error) {
    out.textContent = "error: " + result.error;
    return;
  }
  solvedPoints.push(result);
  plotCurve();
  out.textContent = [
    `G(n=${result.n}, p=${result.p}, seed=${result.seed}): ${result.edges} edges`,
    `f = ${result.f}   (f/n = ${result.f_over_n.toFixed(4)}, predicted f̂ = ${result.fhat_predicted.toFixed(4)})`,
    `witness  ${result.witness_line}`,
    `bounds   δ+1 = ${result.mindeg_bound}, pair = ${result.pair_bound}  →  source: ${result.bound_source}`,
    `regime   predicted ${result.regime_predicted}, observed ${result.regime_observed}`,
    `search   ${result.nodes_explored} subsets visited, proven optimal: ${result.proven_optimal}`,
  ].join("\n");
}

function plotMoment(data) {
  const canvas = document.getElementById("moment");
  const ctx = canvas.getContext("2d");
  const { width: W, height: H } = canvas;
  const pad = { left: 54, right: 16, top: 12, bottom: 30 };
  const rows = data.rows;
  const lo = Math.min(...rows.map((r) => r.log2_sum), -1);
  const hi = Math.max(...rows.map((r) => r.log2_sum), 1);
  const x = (i) => pad.left + ((i + 0.5) / rows.length) * (W - pad.left - pad.right);
  const y = (v) => pad.top + ((hi - v) / (hi - lo)) * (H - pad.top - pad.bottom);
  const barW = Math.max(1, ((W - pad.left - pad.right) / rows.length) * 0.7);

  ctx.clearRect(0, 0, W, H);
  ctx.strokeStyle = "#aab7c4";
  ctx.strokeRect(pad.left, pad.top, W - pad.left - pad.right, H - pad.top - pad.bottom);
  ctx.fillStyle = "#51606e";
  ctx.font = "12px system-ui";
  ctx.textAlign = "right";
  ctx.fillText("log₂ sum", pad.left - 6, pad.top + 10);
  ctx.fillText("0", pad.left - 6, y(0) + 4);

  // zero line: sums above it mean witnesses are expected to exist
  ctx.setLineDash([4, 4]);
  ctx.strokeStyle = "#c9b18f";
  ctx.beginPath();
  ctx.moveTo(pad.left, y(0));
  ctx.lineTo(W - pad.right, y(0));
  ctx.stroke();
  ctx.setLineDash([]);

  ctx.textAlign = "center";
  rows.forEach((r, i) => {
    const highlight = data.crossover_l === r.l;
    ctx.fillStyle = highlight ? "#c02626" : r.log2_sum >= 0 ? "#1f7a43" : "#2458a6";
    const top = Math.min(y(0), y(r.log2_sum));
    ctx.fillRect(x(i) - barW / 2, top, barW, Math.abs(y(r.log2_sum) - y(0)));
    if (r.l % Math.ceil(rows.length / 12) === 0) {
      ctx.fillStyle = "#51606e";
      ctx.fillText(String(r.l), x(i), H - pad.bottom + 16);
    }
  });
  ctx.fillStyle = "#51606e";
  ctx.fillText("l", (pad.left + W - pad.right) / 2, H - 4);
}

function runMoment() {
  const n = Number(document.getElementById("fm-n").value);
  const p = Number(document.getElementById("fm-p").value);
  const out = document.getElementById("fm-out");
  const lMax = Math.min(n, Math.max(20, Math.round(0.35 * n)));
  const data = JSON.parse(first_moment_profile_json(n, p, lMax));
  if (data.error) {
    out.textContent = "error: " + data.error;
    return;
  }
  plotMoment(data);
  const lines = [];
  if (data.crossover_l != null) {
    lines.push(
      `crossover: least l with sum ≥ 1 is ${data.crossover_l}  (l/n = ${(data.crossover_l / n).toFixed(4)})`,
    );
  } else {
    lines.push(`no crossover up to l = ${lMax}`);
  }
  if (Math.abs(p - 0.5) < 1e-9) {
    lines.push(`compare λ₀·n = ${(data.lambda0 * n).toFixed(2)}`);
  }
  out.textContent = lines.join("\n");
}

async function main() {
  await init();
  curveData = JSON.parse(curve_json(400));
  plotCurve();
  runMoment();

  document.getElementById("solve-btn").addEventListener("click", runSolve);
  document.getElementById("fm-btn").addEventListener("click", runMoment);
  const pSlider = document.getElementById("solve-p");
  pSlider.addEventListener("input", () => {
    document.getElementById("solve-p-label").textContent = Number(pSlider.value).toFixed(2);
  });
  const fmSlider = document.getElementById("fm-p");
  fmSlider.addEventListener("input", () => {
    document.getElementById("fm-p-label").textContent = Number(fmSlider.value).toFixed(2);
  });
}

main();
