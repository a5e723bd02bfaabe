import io
import subprocess
import sys

import pytest

from rackcount import fixtures
from rackcount.cli import main
from rackcount.cohomology import loads_cochain


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


R = fixtures.rack_path
L = fixtures.link_path


class TestRackCheck:
    def test_t_ex6(self):
        code, out, _ = run("rack-check", R("t_ex6"))
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "valid rack, n=7, quandle=no, N=2"
        assert lines[1] == "diagonal: (4 6)(5 7)"
        assert lines[3] == "operator classes: {1} {2} {3} {4,6} {5,7}"

    def test_trivial_quandle(self):
        code, out, _ = run("rack-check", R("trivial3"))
        assert code == 0
        assert "quandle=yes, N=1" in out.splitlines()[0]

    def test_invalid(self, tmp_path):
        p = tmp_path / "bad.rack"
        p.write_text("2\n1 2\n1 2\n")
        code, out, _ = run("rack-check", p)
        assert code == 1
        assert out.startswith("invalid rack, n=2")

    def test_corrupted(self, tmp_path):
        p = tmp_path / "bad.rack"
        p.write_text("3\n1 2 3\n2 x 1\n3 1 2\n")
        code, out, err = run("rack-check", p)
        assert code == 2
        assert out == ""
        assert "line 3" in err and "column 3" in err

    def test_missing_file(self, tmp_path):
        code, _, err = run("rack-check", tmp_path / "nope.rack")
        assert code == 2
        assert "nope.rack" in err


class TestRackCocycles:
    def test_m_t_mod_13_lists_known_cocycle(self):
        code, out, _ = run("rack-cocycles", R("m_t"), "--mod", 13, "--all-up-to", 200)
        assert code == 0
        count = int(out.splitlines()[0].rsplit(":", 1)[1])
        blocks = out.split("# solution ")[1:]
        assert len(blocks) == min(count, 200)
        listed = {loads_cochain(b.split("\n", 1)[1]) for b in blocks}
        assert fixtures.cochain("phi13_mt") in listed

    def test_trivial1_mod_5(self):
        code, out, _ = run("rack-cocycles", R("trivial1"), "--mod", 5, "--all-up-to", 10)
        assert code == 0
        assert out.splitlines()[0] == "reduced 2-cocycles mod 5: 1"
        assert out.count("# solution ") == 1
        assert "1 5\n0\n" in out

    def test_m12_mod_2(self):
        code, out, _ = run("rack-cocycles", R("m12"), "--mod", 2)
        assert code == 0
        assert out.splitlines()[0] == "reduced 2-cocycles mod 2: 2"

    def test_generators_parse(self):
        _, out, _ = run("rack-cocycles", R("t_ex6"), "--mod", 5)
        for block in out.split("# generator ")[1:]:
            phi = loads_cochain(block.split("\n", 1)[1])
            assert (phi.n, phi.modulus) == (7, 5)

    def test_bad_modulus(self):
        code, _, _ = run("rack-cocycles", R("m12"), "--mod", 1)
        assert code == 2

    def test_invalid_rack_refused(self, tmp_path):
        p = tmp_path / "bad.rack"
        p.write_text("2\n1 2\n1 2\n")
        assert run("rack-cocycles", p, "--mod", 2)[0] == 1


class TestLinkInfo:
    def test_examples(self):
        assert run("link-info", L("trefoil"))[1] == "components=1, sw=(3), arcs=3\n"
        assert run("link-info", L("hopf"))[1].startswith("components=2, sw=(0,0), lk(1,2)=1")
        assert run("link-info", L("unknot"))[1] == "components=1, sw=(0), arcs=1\n"
        assert "lk(1,2)=2" in run("link-info", L("t42"))[1]

    def test_parse_error(self, tmp_path):
        p = tmp_path / "bad.gauss"
        p.write_text("O1+,U2+\n")
        code, _, err = run("link-info", p)
        assert code == 2
        assert err


class TestInvariant:
    def test_ir(self):
        code, out, _ = run("invariant", "ir", R("t_ex6"), L("trefoil"))
        assert code == 0
        assert out.splitlines()[0] == "22"

    def test_pr(self):
        code, out, _ = run("invariant", "pr", R("m12"), L("hopf"))
        assert code == 0
        assert out == "4q1q2\n(1,1) 0 4\n"

    def test_phi_unlink(self):
        code, out, _ = run(
            "invariant", "phi", R("m_t"), L("unlink2"), "--cocycle", fixtures.cochain_path("phi13_mt")
        )
        assert code == 0
        assert out == "16\n(0,0) 0 16\n"

    def test_quiet(self):
        _, out, _ = run("invariant", "pr", R("m12"), L("hopf"), "--quiet")
        assert out == "4q1q2\n"

    def test_phi_requires_cocycle(self):
        assert run("invariant", "phi", R("m_t"), L("hopf"))[0] == 2

    def test_inadmissible(self, tmp_path):
        p = tmp_path / "c.cochain"
        p.write_text("4 13\n1 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n")
        code, _, err = run("invariant", "phi", R("m_t"), L("hopf"), "--cocycle", p)
        assert code == 1
        assert "cocycle" in err

    def test_not_reduced(self, tmp_path):
        p = tmp_path / "c.cochain"
        p.write_text("3 5\n1 0 0\n0 0 0\n0 0 0\n")
        code, _, err = run("invariant", "phi", R("trivial3"), L("unknot"), "--cocycle", p)
        assert code == 1
        assert "reduced" in err

    def test_corrupted_cochain(self, tmp_path):
        p = tmp_path / "c.cochain"
        p.write_text("4 13\n1 0 0\n")
        code, _, _ = run("invariant", "phi", R("m_t"), L("hopf"), "--cocycle", p)
        assert code == 2

    def test_bad_kind(self):
        assert run("invariant", "xx", R("m_t"), L("hopf"))[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("rack-check", R("m_t")),
        ("rack-cocycles", R("m_t"), "--mod", 13, "--all-up-to", 30),
        ("invariant", "phi", R("m_t"), L("t42"), "--cocycle", fixtures.cochain_path("phi13_mt")),
        ("invariant", "ir", R("t_ex6"), L("trefoil_w4")),
    ],
)
def test_deterministic(argv):
    assert run(*argv) == run(*argv)


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rackcount.cli", "invariant", "ir", str(R("t_ex6")), str(L("unknot")), "--quiet"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "10\n"
