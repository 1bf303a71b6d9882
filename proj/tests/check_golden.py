"""Compare `jlt appendix-a` against the committed golden files, byte for byte."""

import os
import subprocess
import sys
import time

CASES = [
    ([], {}, "appendix_a.md"),
    (["--json"], {}, "appendix_a.json"),
    ([], {"JLT_ASCII": "1"}, "appendix_a.ascii.md"),
]


def main() -> int:
    tool, golden_dir = sys.argv[1], sys.argv[2]
    failures = 0
    for flags, extra_env, name in CASES:
        env = {k: v for k, v in os.environ.items() if k != "JLT_ASCII"}
        env.update(extra_env)
        start = time.monotonic()
        proc = subprocess.run([tool, *flags, "appendix-a"], capture_output=True, env=env, check=False)
        elapsed = time.monotonic() - start
        with open(os.path.join(golden_dir, name), "rb") as f:
            expected = f.read()
        if proc.returncode != 0 or proc.stdout != expected:
            failures += 1
            print(f"FAIL {name}: exit {proc.returncode}, {len(proc.stdout)} bytes vs {len(expected)} expected")
        elif elapsed >= 1.0:
            failures += 1
            print(f"FAIL {name}: took {elapsed:.3f} s")
        else:
            print(f"ok   {name} ({elapsed * 1000:.1f} ms)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
