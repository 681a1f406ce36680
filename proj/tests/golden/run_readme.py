"""Runs every `$ ` command in the README's console blocks and compares stdout byte for byte."""

import os
import re
import subprocess
import sys
import tempfile


def examples(text):
    for block in re.findall(r"```console\n(.*?)```", text, re.S):
        command, expected = None, []
        for line in block.splitlines(keepends=True):
            if line.startswith("$ "):
                if command is not None:
                    yield command, "".join(expected)
                command, expected = line[2:].rstrip("\n"), []
            else:
                expected.append(line)
        if command is not None:
            yield command, "".join(expected)


def main():
    readme, bindir = sys.argv[1], sys.argv[2]
    with open(readme, encoding="utf-8") as f:
        text = f.read()
    env = dict(os.environ, PATH=bindir + os.pathsep + os.environ.get("PATH", ""))
    failed = 0
    count = 0
    with tempfile.TemporaryDirectory() as cwd:
        for command, expected in examples(text):
            count += 1
            got = subprocess.run(["bash", "-o", "pipefail", "-c", command], cwd=cwd, env=env,
                                 capture_output=True, text=True).stdout
            if got != expected:
                failed += 1
                print(f"MISMATCH: {command}\n--- expected\n{expected}--- got\n{got}")
    print(f"{count - failed} of {count} README examples match")
    return 1 if failed or count == 0 else 0


if __name__ == "__main__":
    sys.exit(main())
