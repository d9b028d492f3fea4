import random
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperrr.cli import COMMANDS, JobSpec, main, parse_jobspec, render_jobspec, run
from hyperrr.errors import ParseError, SemanticError
from hyperrr.gpoly import Poly

from worked_examples import random_instance

JOBS = Path(__file__).resolve().parent.parent / "jobs"

GF5_JOB = """\
# (6,3,4) code over GF(5)
field p=5 t=1
curve f=1,4,0,0,0,1 h=0
divisor (0,1)*1 (1,4)*1 inf*2
g (2,1) (2,4) (3,1) (3,4) (4,1) (4,4)
cmd encode
"""


def tsv_blocks(out: str) -> dict:
    blocks, lines = {}, out.splitlines()
    i = 0
    while i < len(lines):
        head = lines[i].split()
        if len(head) == 3 and head[1].startswith("rows="):
            rows = int(head[1][5:])
            blocks[head[0]] = [line.split("\t") for line in lines[i + 1:i + 1 + rows]]
            assert lines[i + 1 + rows] == "---"
            i += rows + 2
        else:
            i += 1
    return blocks


def test_parse_gf5_job():
    job = parse_jobspec(GF5_JOB)
    assert job.n == 4 and job.j == 2
    assert job.omega == 2
    assert job.command == "encode"
    assert len(job.g_points) == 6


def test_empty_file():
    with pytest.raises(ParseError) as exc:
        parse_jobspec("")
    assert exc.value.line == 1
    assert "missing field" in str(exc.value)


def test_point_off_curve():
    text = GF5_JOB.replace("(0,1)*1", "(0,2)*1")
    with pytest.raises(SemanticError) as exc:
        parse_jobspec(text)
    assert exc.value.line == 4


@pytest.mark.parametrize(
    "text,line",
    [
        ("field p=5\nfield p=7\n", 2),
        ("field p=5\nbogus 1\n", 2),
        ("field p=x\ncmd points\n", 1),
        ("field p=5\ncurve f=1,4,0,0,0,1\ncmd nonsense\n", 3),
        ("field p=5\ncurve f=1,4,0,0,0,1\ndivisor (0,1*1\ncmd basis\n", 3),
        ("field p=5\ncurve f=1,4,0,0,0,1\ncmd basis\n", 3),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as exc:
        parse_jobspec(text)
    assert exc.value.line == line


def test_singular_curve_is_semantic_error():
    text = (JOBS / "gf31_goppa.job").read_text().replace(" singular_ok", "")
    with pytest.raises(SemanticError):
        parse_jobspec(text)


def test_encode_gf5():
    out, code = run(parse_jobspec(GF5_JOB))
    assert code == 0
    blocks = tsv_blocks(out)
    assert blocks["generator"] == [["1"] * 6, ["2", "2", "3", "3", "4", "4"], ["4", "3", "1", "4", "2", "1"]]
    assert "code m=6 k=3 d=4 mds=true" in out


def test_encode_gf31():
    out, code = run(parse_jobspec((JOBS / "gf31_goppa.job").read_text()))
    assert code == 0
    blocks = tsv_blocks(out)
    assert blocks["generator"] == [["1", "1", "1", "1"], ["30", "20", "15", "12"]]
    assert blocks["parity_check"] == [["16", "14", "1", "0"], ["7", "23", "0", "1"]]
    assert "d=3 mds=true" in out


def test_hexacode_job():
    out, _ = run(parse_jobspec((JOBS / "hexacode.job").read_text()))
    gen = tsv_blocks(out)["generator"]
    assert gen == [
        ["[1,0]"] * 6,
        ["[0,0]", "[0,0]", "[1,0]", "[1,0]", "[0,1]", "[0,1]"],
        ["[0,1]", "[0,0]", "[0,1]", "[1,0]", "[1,0]", "[0,0]"],
    ]
    assert "d=4" in out


def test_fitcurve_job():
    out, _ = run(parse_jobspec((JOBS / "gf31_fit.job").read_text()))
    assert "coeffs=22,10,26,3,14,18" in out
    blocks = tsv_blocks(out)
    assert blocks["vandermonde"][0] == ["1", "30", "1", "30", "1", "30"]
    assert blocks["vandermonde_inverse"][5] == ["24", "7", "1", "28", "30", "21"]


def test_basis_dim_points_distance():
    job = parse_jobspec(GF5_JOB.replace("cmd encode", "cmd basis"))
    out, _ = run(job)
    assert out.splitlines() == [
        "dim=3 case=with-psi",
        "(1 + 0*y)/1",
        "(1*x + 0*y)/1",
        "(1 + 3*x + 1*y)/(4*x + 1*x^2)",
    ]
    out, _ = run(parse_jobspec(GF5_JOB.replace("cmd encode", "cmd dim --oracle")))
    assert out == "dim g=2 j=2 n=4 rr_dim=3 oracle=3\n"
    out, _ = run(parse_jobspec(GF5_JOB.replace("cmd encode", "cmd distance")))
    assert out == "code m=6 k=3 d=4 mds=true goppa_bound=2\n"
    out, _ = run(parse_jobspec(GF5_JOB.replace("cmd encode", "cmd points")))
    lines = out.splitlines()
    assert lines[0] == f"points count={len(lines) - 1}"
    assert "(2,1)" in lines and lines[-1] == "inf"


def test_dim_table(capsys):
    assert main(["dim-table", "-g", "5", "-j", "4", "--n-min", "4", "--n-max", "8"]) == 0
    out = capsys.readouterr().out
    assert [int(line.split("dim=")[1]) for line in out.splitlines()] == [1, 1, 2, 3, 4]


def test_exit_codes(tmp_path, capsys):
    good = tmp_path / "good.job"
    good.write_text(GF5_JOB)
    assert main(["run", str(good)]) == 0
    bad = tmp_path / "bad.job"
    bad.write_text("field p=5\nwhat\n")
    assert main(["run", str(bad)]) == 2
    assert "error[ParseError]" in capsys.readouterr().err
    off = tmp_path / "off.job"
    off.write_text(GF5_JOB.replace("(0,1)*1", "(0,2)*1"))
    assert main(["run", str(off)]) == 1
    notprime = tmp_path / "np.job"
    notprime.write_text("field p=4\ncmd points\n")
    assert main(["run", str(notprime)]) == 1
    budget = tmp_path / "budget.job"
    budget.write_text(GF5_JOB.replace("cmd encode", "cmd distance"))
    assert main(["run", str(budget), "--budget", "10"]) == 0
    assert "bounds=[2,4]" in capsys.readouterr().out


@pytest.mark.parametrize("name", sorted(p.name for p in JOBS.glob("*.job")))
def test_shipped_jobs_round_trip_and_determinism(name):
    text = (JOBS / name).read_text()
    job = parse_jobspec(text)
    assert parse_jobspec(render_jobspec(job)) == job
    first = subprocess.run([sys.executable, "-m", "hyperrr", "run", str(JOBS / name)], capture_output=True)
    second = subprocess.run([sys.executable, "-m", "hyperrr", "run", str(JOBS / name)], capture_output=True)
    assert first.returncode == 0
    assert first.stdout == second.stdout


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10**6), command=st.sampled_from(COMMANDS[:5]), oracle=st.booleans(), use_kappa=st.booleans())
def test_round_trip_random_jobs(seed, command, oracle, use_kappa):
    rng = random.Random(seed)
    C, D = random_instance(rng)
    ctx = C.ctx
    support = set(D.support())
    G = tuple(P for P in C.points()[:-1] if P not in support and rng.random() < 0.7)
    kappa = None
    if use_kappa:
        kappa = Poly(ctx, [ctx.from_index(rng.randrange(ctx.q)) for _ in range(3)])
    job = JobSpec(
        ctx=ctx, command=command, f=C.f, h=C.h, divisor=tuple(D.affine()), omega=D.omega,
        kappa=kappa, g_points=G, oracle=oracle,
    )
    assert parse_jobspec(render_jobspec(job)) == job
