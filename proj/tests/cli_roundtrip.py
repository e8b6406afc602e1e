#!/usr/bin/env python3
"""Command-line interface checks: JSON round-trips, byte-identical output
across runs and worker counts, and budget overrides from the environment."""

import json
import os
import subprocess
import sys

CLI = sys.argv[1]


def run(*args, env=None, expect_rc=0):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env)
    if proc.returncode != expect_rc:
        raise SystemExit(
            f"{' '.join(args)}: exit {proc.returncode}, expected {expect_rc}\n"
            f"stdout: {proc.stdout}\nstderr: {proc.stderr}"
        )
    return proc.stdout


def main():
    # classify JSON round-trips and repeats byte for byte
    out1 = run("classify", "--type", "A", "--rank", "2", "--word", "1,2,1", "--format", "json")
    out2 = run("classify", "--type", "A", "--rank", "2", "--word", "1,2,1", "--format", "json")
    assert out1 == out2, "classify output differs between runs"
    rec = json.loads(out1)
    assert rec["length"] == 3
    assert rec["N"] == 1
    assert rec["freely_braided"] is True
    assert rec["content_maximal"] is True
    assert rec["fully_commutative"] is False
    assert rec["poincare"] == [1, 2, 2, 1]
    assert rec["smooth"] is True
    assert rec["canonical_word"] == [1, 2, 1]

    # a non-reduced word is accepted and reported with its canonical form
    warn = json.loads(
        run("classify", "--type", "A", "--rank", "2", "--word", "1,1,2", "--format", "json")
    )
    assert warn["reduced_input"] is False
    assert "warning" in warn
    assert warn["canonical_word"] == [2]

    # the identity classifies as smooth
    ident = json.loads(
        run("classify", "--type", "A", "--rank", "1", "--word", "", "--format", "json")
    )
    assert ident["length"] == 0
    assert ident["smooth"] is True

    # census output is identical for any worker count
    c1 = run("census", "--type", "A", "--rank", "4", "--jobs", "1", "--format", "json")
    c3 = run("census", "--type", "A", "--rank", "4", "--jobs", "3", "--format", "json")
    assert c1 == c3, "census output depends on the worker count"
    assert json.loads(c1)["content_maximal"] == 61

    # fixed CSV column order
    csv = run("census", "--type", "A", "--rank", "2", "--format", "csv")
    assert csv.splitlines()[0] == "family,rank,total,fully_commutative,freely_braided,content_maximal"
    assert csv.splitlines()[1] == "A,2,6,5,6,6"

    # environment budget override forces a resource refusal
    run(
        "classify", "--type", "A", "--rank", "3", "--word", "1,2,1,3,2,1",
        env={"FREEBRAID_TRAVERSAL_CAP": "2"},
        expect_rc=1,
    )

    # verify failure path exits nonzero on an unknown suite
    run("verify", "--suite", "nonsense", "--type", "A", "--rank", "2", expect_rc=1)

    print("cli round-trip checks passed")


if __name__ == "__main__":
    main()
