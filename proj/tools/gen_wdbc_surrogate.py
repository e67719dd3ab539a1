#!/usr/bin/env python3
"""Generate data/breast-cancer-wisconsin.data, a synthetic stand-in for the
UCI "Breast Cancer Wisconsin (Original)" file.

The real file cannot be redistributed from this environment, so this script
fabricates one with the same layout and the same structural counts:

  * 699 rows of `id,a1,...,a9,class` with attribute values in 1..10
  * class 2 (benign, 458 rows) or 4 (malignant, 241 rows)
  * 16 rows carry a missing attribute 6 written as '?'
    (14 benign, 2 malignant), so cleaning leaves 683 rows, 444 benign

Attribute values are drawn from class-conditional discretized normals whose
means follow the published per-attribute summaries, so simple classifiers
behave like they do on the original data. Deterministic: fixed seed.
"""

import numpy as np

BENIGN_MEAN = [2.96, 1.33, 1.44, 1.36, 2.12, 1.35, 2.10, 1.29, 1.06]
BENIGN_SD = [1.67, 0.91, 1.00, 0.95, 0.92, 1.18, 1.08, 1.06, 0.50]
MALIG_MEAN = [7.19, 6.57, 6.56, 5.55, 5.30, 7.63, 5.98, 5.86, 2.59]
MALIG_SD = [2.43, 2.72, 2.56, 3.21, 2.45, 3.12, 2.27, 3.35, 2.56]


def draw_row(rng, mean, sd):
    vals = np.rint(rng.normal(mean, sd)).astype(int)
    return np.clip(vals, 1, 10)


def main():
    rng = np.random.default_rng(19920701)
    rows = []
    for _ in range(458):
        rows.append((draw_row(rng, BENIGN_MEAN, BENIGN_SD), 2))
    for _ in range(241):
        rows.append((draw_row(rng, MALIG_MEAN, MALIG_SD), 4))
    order = rng.permutation(len(rows))
    rows = [rows[i] for i in order]

    # scatter the 16 missing attribute-6 cells: 14 benign, 2 malignant
    benign_idx = [i for i, (_, c) in enumerate(rows) if c == 2]
    malig_idx = [i for i, (_, c) in enumerate(rows) if c == 4]
    missing = set(rng.choice(benign_idx, 14, replace=False)) | set(
        rng.choice(malig_idx, 2, replace=False)
    )

    ids = rng.integers(63375, 1371026, size=len(rows))
    lines = []
    for i, (vals, cls) in enumerate(rows):
        fields = [str(ids[i])]
        for j, v in enumerate(vals):
            fields.append("?" if (j == 5 and i in missing) else str(v))
        fields.append(str(cls))
        lines.append(",".join(fields))
    with open("data/breast-cancer-wisconsin.data", "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")

    raw = len(lines)
    miss = sum(1 for ln in lines if "?" in ln)
    benign_clean = sum(
        1 for ln in lines if "?" not in ln and ln.endswith(",2")
    )
    print(f"rows={raw} missing={miss} clean={raw - miss} benign_clean={benign_clean}")


if __name__ == "__main__":
    main()
