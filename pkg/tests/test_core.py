import io
import json

import pytest

from semifieldpy.bilinear.constructors import field_quotient_map, random_alternating
from semifieldpy.bilinear.textio import format_map, parse_map
from semifieldpy.config import settings, use_settings
from semifieldpy.core import main
from semifieldpy.embed.class_two import Class2Data
from semifieldpy.formats import format_class2, parse_group_spec, parse_witness
from semifieldpy.isotopy.isotopism import check_witness
from semifieldpy.linalg.field import FieldParams


@pytest.fixture
def gf3():
    return FieldParams(3)


@pytest.fixture
def write(tmp_path):
    def write_file(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write_file


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def report(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


class TestGenFieldAndCheck:
    def test_gen_field_prints_map(self, capsys, gf3):
        code, out = run(capsys, "gen-field", "--p", "3", "--n", "2", "--m", "2")
        assert code == 0
        assert parse_map(out) == field_quotient_map(gf3, 2, 2)

    def test_gen_field_to_file(self, capsys, tmp_path):
        target = tmp_path / "field.txt"
        code, out = run(capsys, "gen-field", "--p", "2", "--n", "3", "--m", "3", "-o",
                        str(target))
        assert code == 0 and out == ""
        assert target.read_text(encoding="utf-8").startswith("p=2 n=3 m=3\n")

    def test_check(self, capsys, write, gf3):
        path = write("alpha.txt", format_map(field_quotient_map(gf3, 3, 3)))
        code, data = report(capsys, "check", "--map", path)
        assert code == 0
        assert data["schema"] == "semifieldpy.report/1"
        assert data["command"] == "check"
        assert data["results"]["nonsingular"] and data["results"]["symmetric"]
        assert {"inputs", "timing_ms", "version"} <= data.keys()

    def test_check_singular(self, capsys, write):
        code, data = report(capsys, "check", "--map", write("zero.txt", "p=3 n=1 m=1\n0\n"))
        assert code == 1
        assert not data["results"]["nonsingular"]

    def test_bad_input(self, capsys, write):
        code = main(["check", "--map", write("bad.txt", "p=4 n=1 m=1\n1\n")])
        captured = capsys.readouterr()
        assert code == 2
        assert captured.out == ""
        assert "line 1" in captured.err

    def test_missing_file(self, capsys, tmp_path):
        code, _ = run(capsys, "check", "--map", str(tmp_path / "absent.txt"))
        assert code == 2

    def test_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("p=3 n=1 m=1\n1\n"))
        code, out = run(capsys, "check", "--map", "-")
        assert code == 0
        assert json.loads(out)["results"]["nonsingular"]


class TestGroupCommands:
    def test_group_verify(self, capsys, write, gf3):
        path = write("alpha.txt", format_map(field_quotient_map(gf3, 2, 2)))
        code, data = report(capsys, "group-verify", "--alpha", path)
        assert code == 0
        assert data["results"]["semi_extraspecial"]
        assert data["results"]["exponent"] == 3

    def test_group_verify_rejects_singular(self, capsys, write):
        code, _ = run(capsys, "group-verify", "--alpha", write("zero.txt", "p=3 n=1 m=1\n0\n"))
        assert code == 2

    def test_complements(self, capsys, write, gf3):
        alpha = write("alpha.txt", format_map(field_quotient_map(gf3, 3, 3)))
        code, data = report(capsys, "complements", "--alpha", alpha)
        assert code == 0
        assert data["results"]["has_abelian_complement"]
        assert data["results"]["count"] == 27
        assert data["results"]["coset_count"] == 27

    def test_complements_reads_stdin_by_default(self, capsys, monkeypatch):
        _, field = run(capsys, "gen-field", "--p", "2", "--n", "2", "--m", "1")
        monkeypatch.setattr("sys.stdin", io.StringIO(field))
        code, data = report(capsys, "complements")
        assert code == 0
        assert data["results"]["count"] == 8

    def test_cosets_limit_help_describes_refusal(self, capsys):
        with pytest.raises(SystemExit):
            main(["cosets", "--help"])
        assert "Refuse (exit 3)" in capsys.readouterr().out

    def test_cosets_over_limit(self, capsys, write, gf3):
        alpha = write("alpha.txt", format_map(field_quotient_map(gf3, 3, 3)))
        code, data = report(capsys, "cosets", "--alpha", alpha, "--limit", "5")
        assert code == 3
        assert data["results"]["coset_count"] == 27
        assert data["results"]["representatives"] is None

    def test_cosets(self, capsys, write, gf3):
        alpha = write("alpha.txt", format_map(field_quotient_map(gf3, 3, 3)))
        code, data = report(capsys, "cosets", "--alpha", alpha)
        assert code == 0
        assert len(data["results"]["representatives"]) == 27

    def test_oracle(self, capsys, write, gf3):
        alpha = write("alpha.txt", format_map(field_quotient_map(gf3, 1, 1)))
        code, data = report(capsys, "oracle", "--alpha", alpha, "--exhaustive")
        assert code == 0
        results = data["results"]
        assert results["axioms"] and results["axioms_exhaustive"]
        assert results["center_size"] == 3
        assert results["closed_forms_match"]
        assert results["abelian_complements_census"] == 3
        assert results["abelian_complements_formula"] == 3
        assert results["complements_match"]

    def test_oracle_over_table_cap(self, capsys, write):
        alpha = write("alpha.txt", "p=3 n=1 m=1\n1\n")
        with use_settings(settings().replace(table_cap=10)):
            code, data = report(capsys, "oracle", "--alpha", alpha)
        assert code == 3
        assert data["results"]["required"] == 27


class TestIsotopyCommands:
    def test_isotopic(self, capsys, write, tmp_path, gf3):
        alpha = field_quotient_map(gf3, 2, 2)
        moved = alpha.precompose(gf3.matrix([[1, 1], [0, 1]]), gf3.identity(2))
        first = write("a1.txt", format_map(alpha))
        second = write("a2.txt", format_map(moved))
        target = tmp_path / "witness.txt"
        code, data = report(capsys, "isotopic", "--a1", first, "--a2", second, "-o",
                            str(target))
        assert code == 0
        assert data["results"]["status"] == "found"
        assert check_witness(alpha, moved, parse_witness(target.read_text(encoding="utf-8")))

    def test_isotopic_none(self, capsys, write):
        first = write("a1.txt", "p=2 n=2 m=2\n0 0\n0 0\n\n0 0\n0 0\n")
        second = write("a2.txt", format_map(field_quotient_map(FieldParams(2), 2, 2)))
        code, data = report(capsys, "isotopic", "--a1", first, "--a2", second)
        assert code == 1
        assert data["results"]["status"] == "none"

    def test_isotopic_inconclusive(self, capsys, write):
        first = write("a1.txt", "p=2 n=2 m=2\n0 0\n0 0\n\n0 0\n0 0\n")
        second = write("a2.txt", format_map(field_quotient_map(FieldParams(2), 2, 2)))
        code, data = report(capsys, "isotopic", "--a1", first, "--a2", second, "--budget", "6")
        assert code == 3
        assert data["results"]["status"] == "inconclusive"

    def test_extract(self, capsys, write, tmp_path, gf3):
        alpha = write("alpha.txt", format_map(field_quotient_map(gf3, 2, 2)))
        target = tmp_path / "extracted.txt"
        code, data = report(capsys, "extract", "--alpha", alpha, "--seed", "7", "-o",
                            str(target))
        assert code == 0
        assert data["results"]["witness_verified"] and data["results"]["invariants_match"]
        assert parse_group_spec(target.read_text(encoding="utf-8")).order == 3 ** 6

    def test_sym_isotope(self, capsys, write, gf3):
        alpha = write("alpha.txt", format_map(field_quotient_map(gf3, 3, 3)))
        code, data = report(capsys, "sym-isotope", "--alpha", alpha)
        assert code == 0
        assert data["results"]["status"] == "found"


class TestEmbedCommand:
    def test_embed(self, capsys, write, gf3):
        gamma = write("gamma.txt", format_class2(Class2Data(random_alternating(gf3, 3, 1,
                                                                               seed=2))))
        code, data = report(capsys, "embed", "--gamma", gamma)
        assert code == 0
        assert data["results"]["verified"] and data["results"]["ultraspecial"]
        assert data["results"]["dims"] == [3, 3, 3]

    def test_embed_rejects_even_prime(self, capsys, write):
        gamma = write("gamma.txt", "kind=class2\np=2 n=2 m=1\n0 1\n1 0\n")
        code, _ = run(capsys, "embed", "--gamma", gamma)
        assert code == 2


class TestArguments:
    def test_unknown_command(self):
        with pytest.raises(SystemExit) as info:
            main(["frobnicate"])
        assert info.value.code == 2

    def test_jobs(self, capsys, write, gf3):
        path = write("alpha.txt", format_map(field_quotient_map(gf3, 2, 2)))
        code, data = report(capsys, "--jobs", "2", "group-verify", "--alpha", path)
        assert code == 0
        assert data["inputs"]["jobs"] == 2
