"""CLI invocations pinned by golden files in tests/golden/.

Regenerate with ``python tests/golden_cases.py`` after an intended change.
"""

import contextlib
import io
import sys
from pathlib import Path

GOLDEN_DIR = Path(__file__).parent / "golden"

CASES = {
    "gen_hypercube_3.json": ["gen", "hypercube", "n=3"],
    "gen_gamma_1_0.json": ["gen", "gamma", "k=1", "l=0"],
    "gen_vq_4.json": ["gen", "vq-rule", "n=4"],
    "gen_random_hl_4.edgelist": ["gen", "random-hl:n=4,seed=7", "--format", "edgelist"],
    "gen_g84.dot": ["gen", "g84", "--format", "dot"],
    "f_5_2.txt": ["f", "5", "2"],
    "f_table_10.txt": ["f", "10", "--table"],
    "kappa_q4_g1.json": ["kappa", "--topology", "hypercube:n=4", "--g", "1"],
    "kappa_upper_random_hl_6.json": ["kappa", "--topology", "random-hl:n=6,seed=42", "--g", "3", "--mode", "upper"],
    "kappa_star_gamma_5_0.json": ["kappa", "--topology", "gamma:k=5,l=0", "--g", "11", "--mode", "star-upper"],
    "verify_lemma_star.json": ["verify", "lemma-star", "n=4", "gmax=4"],
    "verify_thm_cor.json": ["verify", "thm-cor", "k=5"],
    "verify_iso.json": ["verify", "iso-vq-delta", "n=1..10"],
    "verify_structure.json": ["verify", "lemma-structure", "n=5", "g=2", "trials=200", "seed=7"],
    "decompose_2_0.json": ["decompose", "2", "0"],
}


def run(argv):
    from hlnet.cli import main

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


if __name__ == "__main__":
    GOLDEN_DIR.mkdir(exist_ok=True)
    for name, argv in CASES.items():
        code, out = run(argv)
        if code != 0:
            sys.exit(f"{name}: exit {code}")
        (GOLDEN_DIR / name).write_text(out)
        print("wrote", name)
