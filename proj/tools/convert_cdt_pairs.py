#!/usr/bin/env python3
"""Convert the Kaggle-style cause-effect CSV (SampleID,A,B + SampleID,Target)
into one whitespace-separated pair file per sample plus a metadata file.

Target 1 means A causes B (cause columns 1-1); -1 means B causes A.
"""
import argparse
import csv
import pathlib
import sys


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("pairs_csv")
    ap.add_argument("targets_csv")
    ap.add_argument("out_dir")
    args = ap.parse_args()

    csv.field_size_limit(sys.maxsize)
    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    with open(args.targets_csv, newline="") as fh:
        targets = {row["SampleID"]: float(row["Target"]) for row in csv.DictReader(fh)}

    meta_lines = []
    with open(args.pairs_csv, newline="") as fh:
        for row in csv.DictReader(fh):
            sample = row["SampleID"]
            pair_id = "pair%04d" % int(sample.removeprefix("pair"))
            a = row["A"].split()
            b = row["B"].split()
            if len(a) != len(b):
                print(f"skipping {sample}: column lengths differ", file=sys.stderr)
                continue
            with open(out / f"{pair_id}.txt", "w") as pf:
                for va, vb in zip(a, b):
                    pf.write(f"{va} {vb}\n")
            if targets[sample] > 0:
                meta_lines.append(f"{pair_id} 1 1 2 2 1.0")
            else:
                meta_lines.append(f"{pair_id} 2 2 1 1 1.0")

    (out / "pairmeta.txt").write_text("\n".join(meta_lines) + "\n")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
