"""Disable ambient heat loss (C = 0): the decay certificate fails, control still works.

With C = 0 the certified decay rate goes negative, so no exponential envelope
is guaranteed. The open-loop energy indeed grows through t = 20 s, yet both
controllers still drive the protected region's energy down, suggesting the
certificate is sufficient but not necessary.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

import firebreak as fb

out = pathlib.Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

traces = {}
for regime in (fb.OPEN_LOOP, fb.KNOWN_WIND, fb.ADAPTIVE):
    scenario = fb.preset_scenario("fig6_c_zero", regime=regime)
    artifacts = fb.simulate(
        scenario.initial_state(),
        scenario.grid,
        scenario.geom,
        scenario.params,
        scenario.wind,
        scenario.run_config(),
    )
    traces[regime] = artifacts.trace
    grew = "grew" if artifacts.trace.energy[-1] > artifacts.trace.energy[0] else "shrank"
    print(f"{regime:10s}: energy {grew} (B(20)/B(0) = {artifacts.trace.energy[-1] / artifacts.trace.energy[0]:.3g})")
print(f"certified rate with C = 0: {artifacts.rate:.4g} 1/s (negative: no certificate)")

fig, ax = plt.subplots(figsize=(7, 4.5))
colors = {fb.OPEN_LOOP: "tab:red", fb.KNOWN_WIND: "tab:blue", fb.ADAPTIVE: "tab:green"}
for regime, trace in traces.items():
    ax.semilogy(trace.times, trace.energy, color=colors[regime], label=regime)
ax.set_xlabel("t (s)")
ax.set_ylabel("deviation energy (K$^2$ m$^2$)")
ax.legend()
ax.grid(True, which="both", alpha=0.3)
fig.tight_layout()
fig.savefig(out / "no_heat_loss.png", dpi=150)
print(f"wrote {out / 'no_heat_loss.png'}")
