import init, { eval_formula, fairness_report, hw_grid } from "./pkg/fuzzbl_wasm_demo.js";

const $ = (id) => document.getElementById(id);
const pretty = (text) => JSON.stringify(JSON.parse(text), null, 2);

function runEval() {
  $("eval-out").textContent = pretty(
    eval_formula($("eval-formula").value, $("eval-logic").value, $("eval-valuation").value),
  );
}

function runBias() {
  for (const k of ["s", "e", "f"]) $(`bias-${k}-v`).value = $(`bias-${k}`).value;
  const [s, e, f] = ["s", "e", "f"].map((k) => parseFloat($(`bias-${k}`).value));
  $("bias-out").textContent = pretty(fairness_report($("bias-logic").value, s, e, f));
}

function drawHw() {
  const steps = 61;
  const delta = parseFloat($("hw-delta").value);
  $("hw-delta-v").value = delta.toFixed(2);
  const grid = JSON.parse(hw_grid(steps, delta));
  if (grid.error) return;
  const values = grid[$("hw-which").value];
  const canvas = $("hw-canvas");
  const ctx = canvas.getContext("2d");
  const cell = canvas.width / steps;
  for (let i = 0; i < steps; i++) {
    for (let j = 0; j < steps; j++) {
      const shade = Math.round(255 * (1 - values[i * steps + j]));
      ctx.fillStyle = `rgb(${shade},${shade},255)`;
      ctx.fillRect(i * cell, canvas.height - (j + 1) * cell, Math.ceil(cell), Math.ceil(cell));
    }
  }
}

await init();
for (const id of ["eval-formula", "eval-logic", "eval-valuation"]) $(id).addEventListener("input", runEval);
for (const id of ["bias-logic", "bias-s", "bias-e", "bias-f"]) $(id).addEventListener("input", runBias);
for (const id of ["hw-delta", "hw-which"]) $(id).addEventListener("input", drawHw);
runEval();
runBias();
drawHw();
