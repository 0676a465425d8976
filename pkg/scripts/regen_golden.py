#!/usr/bin/env python3
"""Regenerate the golden CLI JSON corpus under tests/data/golden/.

Run after intentional output-format changes, then review the diff: the corpus
pins the CLI's JSON contract.
"""

from __future__ import annotations

import contextlib
import io
import json
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from flagdom.cli import main  # noqa: E402

CASES = {
    "roots_a2": ["roots", "--type", "a2"],
    "weyl_b2": ["weyl", "--type", "b2"],
    "schubert_gr24": ["schubert", "--type", "a3", "--levi", "1,3"],
    "restricted_su21": ["restricted", "--form", "su,2,1"],
    "polytope_sl3": ["polytope", "--form", "sl_r,3", "--test", "1/3,1/3"],
    "orbits_sl3": ["orbits", "--form", "sl_r,3", "--flag", "proj"],
    "basecycle_su22": ["basecycle", "--form", "su,2,2", "--flag", "gr,2",
                       "--orbit", "1,1"],
    "bbw_o_minus2": ["bbw", "--k-type", "a1", "--weight=-2"],
    "certify_sl3_minus4": ["certify", "--form", "sl_r,3", "--flag", "proj",
                           "--orbit", "open", "--weight=-4"],
    "scan_sl3": ["scan", "--form", "sl_r,3", "--flag", "proj", "--orbit", "open",
                 "--direction=-1", "--range", "0..4"],
}


def run(argv) -> str:
    buffer = io.StringIO()
    with contextlib.redirect_stdout(buffer):
        code = main(argv)
    assert code == 0, (argv, code)
    return buffer.getvalue()


def main_script():
    target = ROOT / "tests/data/golden"
    target.mkdir(parents=True, exist_ok=True)
    manifest = []
    for name, argv in CASES.items():
        output = run(argv + ["--format", "json"])
        json.loads(output)  # must be valid JSON
        (target / f"{name}.json").write_text(output, "utf-8")
        manifest.append({"name": name, "argv": argv})
    (target / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n", "utf-8")
    print(f"wrote {len(CASES)} golden reports to {target}")


if __name__ == "__main__":
    main_script()
