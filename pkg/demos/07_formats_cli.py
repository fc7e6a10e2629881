"""Text formats and the command line tool.

Shows the layer format, JSON records, error positions for bad input, and
drives the CLI in a subprocess.

Run: python demos/07_formats_cli.py
"""
import os
import subprocess
import sys
import tempfile

from artifact.formats import FormatError, emit_json, emit_layers, fixtures, parse_layers, diagnose

rec = fixtures()[2]
text = emit_layers(rec.arrangement)
print(text)
print(emit_json(rec))

# a duplicated value is reported with its line and column
broken = text.replace(" 1 ", " 2 ", 1) if " 1 " in text else text.replace("1 ", "2 ", 1)
try:
    parse_layers(broken)
except FormatError as e:
    print("\nparse error:", e)

# a transposed pair still parses but is no longer a magic tour
vals = rec.arrangement.values.copy()
vals[[0, 1]] = vals[[1, 0]]
print("diagnosis of a swapped pair:", diagnose(vals))


def cli(*args):
    r = subprocess.run([sys.executable, "-m", "artifact", *args], capture_output=True, text=True)
    print(f"$ artifact {' '.join(args)}  -> exit {r.returncode}")
    print(r.stdout.rstrip()[:400])


with tempfile.TemporaryDirectory() as d:
    cli("fixtures", "--dump", d)
    cli("fixtures")
    cli("verify", os.path.join(d, "tour003.txt"))
    cli("canon", os.path.join(d, "tour003.json"))
    with open(os.path.join(d, "prefix.txt"), "w") as fh:
        fh.write(" ".join(map(str, rec.arrangement.path()[:24])))
    cli("search", "--prefix", os.path.join(d, "prefix.txt"))
    bad = os.path.join(d, "bad.txt")
    with open(bad, "w") as fh:
        fh.write(broken)
    cli("verify", bad)
