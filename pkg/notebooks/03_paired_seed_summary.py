"""
Paired-seed comparison from an ablation directory
=================================================

Reads ``per_seed.csv`` written by ``lpdetr ablate --axis heads`` (by default
the acceptance cache ``runs/acceptance``) and prints the baseline vs full
relation comparison seed by seed.
"""

# %%
import sys
from pathlib import Path

import numpy as np

from lpdetr.harness import read_csv

root = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parents[1] / "runs" / "acceptance"
header, rows = read_csv(root / "per_seed.csv")
col = {name: i for i, name in enumerate(header)}

# %%
table = {}
for row in rows:
    table.setdefault(row[col["variant"]], {})[int(row[col["seed"]])] = (
        float(row[col["val_ap50_half"]] or 0), float(row[col["val_ap50"]] or 0))

names = sorted(table, key=lambda n: int(n.split("_")[-1]))
base, full = names[0], names[-1]
seeds = sorted(table[base])
print(f"{'seed':>4}  {base + ' half':>12} {full + ' half':>12}  {base + ' final':>12} {full + ' final':>12}")
for s in seeds:
    (bh, bf), (fh, ff) = table[base][s], table[full][s]
    print(f"{s:>4}  {bh:12.4f} {fh:12.4f}  {bf:12.4f} {ff:12.4f}")

# %%
bf = np.array([table[base][s][1] for s in seeds])
ff = np.array([table[full][s][1] for s in seeds])
bh = np.array([table[base][s][0] for s in seeds])
fh = np.array([table[full][s][0] for s in seeds])
print(f"final: {full} >= {base} in {np.sum(ff >= bf)}/{len(seeds)} seeds, means {ff.mean():.4f} vs {bf.mean():.4f}")
print(f"half:  {full} >= {base} in {np.sum(fh >= bh)}/{len(seeds)} seeds, means {fh.mean():.4f} vs {bh.mean():.4f}")
