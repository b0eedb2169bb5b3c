"""Run every worked example through the CLI and compare with the expected output."""

import contextlib
import io
import sys
from pathlib import Path

from pcalm.cli import main

HERE = Path(__file__).resolve().parent

# (argv, expected first lines of output)
EXAMPLES = [
    (["table", "--saturate", "--p", "3", "nim:2", "--bound", "3"],
     ["0\t1\t2\t3", "1\t2\t0\t4", "2\t0\t1\t5", "3\t4\t5\t6"]),
    (["sg", "welter:3", "7,5,3"], ["sg=6"]),
    (["sg", "--saturate", "--p", "5", "welter:3", "7,5,3"], ["sg=12"]),
    (["sg", "--saturate", "--p", "5", "sum:welter:3+welter:1", "7,5,3;3"], ["sg=10"]),
    (["sg", "--saturate", "--p", "2", "welter:3", "6,4,2"], ["sg=7", "lg=9"]),
    (["sg", "--saturate", "--p", "2", "welter:3", "5,3,2"], ["sg=7", "lg=7"]),
    (["sg", "--saturate", "--p", "2", "sum:welter:3+welter:2", "6,5,2;3,1"], ["sg=7"]),
    (["sg", "--saturate", "--p", "3", f"explicit:@{HERE / 'games' / 'two_point_3.game'}", "3"], ["sg=1"]),
    (["psi", "--p", "2", "--position", "7,5,3"], ["psi=6"]),
    (["psi", "--p", "5", "5,4,3"], ["psi=12"]),
    (["psi", "--p", "2", "4,4,2;2,1"], ["psi=7"]),
    (["hooks", "5,4,3"], ["1 1 1 2 3 3 3 4 5 5 6 7"]),
    (["fcount", "2,1", "--oracle"], ["f=2", "oracle=2"]),
    (["fcount", "4,3,2"], ["f=168"]),
    (["fcount", "3,2,2"], ["f=21"]),
    (["fcount", "4,4,2;2,1"], ["f=144144"]),
    (["fcount", "2,2,1;2"], ["f=105"]),
    (["pprime", "--p", "2", "4,3,2"], ["Z=3,2,2", "f=21"]),
    (["pprime", "--p", "2", "4,4,2;2,1"], ["Z=2,2,1;2", "f=105"]),
    (["verify", "calm-counterexample", "--p", "3"], None),
]


def run(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue().splitlines()


def main_():
    mismatches = 0
    for argv, want in EXAMPLES:
        code, lines = run(argv)
        ok = code == 0 and (want is None or lines[:len(want)] == want)
        mismatches += not ok
        shown = " | ".join(lines[:4])
        print(f"{'ok  ' if ok else 'DIFF'} pcalm {' '.join(argv)}\n     -> {shown}")
        if not ok and want is not None:
            print(f"     expected {' | '.join(want)}")
    print(f"{len(EXAMPLES) - mismatches}/{len(EXAMPLES)} examples reproduced")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main_())
