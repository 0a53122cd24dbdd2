"""Entropy and partial-transpose curves for real inputs alpha|0> + beta|1>."""

# %%
import numpy as np

from entangler_lab import experiments as exp

fig1, fig2 = exp.entropy_curves(11)
fig3 = exp.ppt_curves(11)

# %% Single-qubit entropy of the ideal target vs the machine output, in units of ln 2
for a2, s_id, s_out in zip(fig1.grid, fig1.series["ideal_entropy_over_ln2"], fig1.series["output_entropy_over_ln2"]):
    print(f"alpha^2={a2:.1f}  ideal {s_id:.4f}  output {s_out:.4f}")

# %% The two-qubit output is least mixed for the balanced input
i = int(np.argmin(fig2.series["output_total_entropy"]))
print("total output entropy is smallest at alpha^2 =", fig2.grid[i])

# %% Both ideal and actual outputs are entangled for every alpha
for a, ideal, out in fig3.rows():
    print(f"alpha={a:.1f}  ideal {ideal:+.6f}  output {out:+.6f}")
