import json
from fractions import Fraction
from unittest import TestCase

import numpy as np
import pytest
from click.testing import CliRunner

from cli import main, run
from constructions import BlockPlan
from membership import MembershipVerdict
from operators import MaxEntRep, SchmidtForm, eval_max_ent, maximally_entangled_state
from tensors import Correlation, MarginalPair, ValidityReport, convex_combine, pr_box, uniform_correlation
from utils import dumps_document, vector_to_pairs
from utils.types import ExitCode, MeasureKind


def invoke(*args, input=None):
    return CliRunner().invoke(main, list(args), input=input)


def document(result):
    assert result.exit_code == 0, result.output
    return json.loads(result.output)


class TestCommands(TestCase):

    def test_chsh(self) -> None:
        data = document(invoke("chsh"))
        self.assertAlmostEqual(data["value"], 0.8535533906, places=9)
        self.assertAlmostEqual(data["classical_value"], 0.75, places=12)
        self.assertEqual(MaxEntRep.from_data(data["rep"]).d, 2)

    def test_random_is_reproducible(self) -> None:
        first = invoke("random", "rep", "--n-a", "2", "--n-b", "2", "--m", "2", "--d", "3", "--seed", "7")
        second = invoke("random", "rep", "--n-a", "2", "--n-b", "2", "--m", "2", "--d", "3", "--seed", "7")
        self.assertEqual(first.exit_code, 0)
        self.assertEqual(first.output, second.output)
        other = invoke("random", "rep", "--n-a", "2", "--n-b", "2", "--m", "2", "--d", "3", "--seed", "8")
        self.assertNotEqual(first.output, other.output)

    def test_random_objects_parse(self) -> None:
        rep = MaxEntRep.from_data(document(invoke("random", "rep", "--n-a", "1", "--n-b", "2", "--m", "3", "--d", "2")))
        self.assertEqual((rep.n_a, rep.n_b, rep.m, rep.d), (1, 2, 3, 2))
        p = Correlation.from_data(document(invoke("random", "correlation", "--n-a", "2", "--n-b", "2", "--m", "2",
                                                  "--nonsignalling", "--seed", "3")))
        self.assertEqual(p.shape, (2, 2, 2, 2))
        measure = document(invoke("random", "pvm", "--d", "3", "--m", "2", "--ranks", "1,2"))
        self.assertEqual(measure["kind"], MeasureKind.PVM)

    def test_combine_then_distance(self) -> None:
        runner = CliRunner()
        with runner.isolated_filesystem():
            for seed, name in ((1, "first.json"), (2, "second.json")):
                result = runner.invoke(main, ["--output", name, "random", "rep", "--n-a", "2", "--n-b", "2",
                                              "--m", "2", "--d", str(seed + 1), "--seed", str(seed)])
                self.assertEqual(result.exit_code, 0)
            result = runner.invoke(main, ["--output", "mix.json", "combine", "first.json", "second.json",
                                          "--weight", "1/3", "--weight", "2/3"])
            self.assertEqual(result.exit_code, 0, result.output)
            self.assertEqual(runner.invoke(main, ["--output", "evaluated.json", "eval", "max-ent", "mix.json"]).exit_code, 0)
            reps = []
            for name in ("first.json", "second.json"):
                with open(name) as handle:
                    reps.append(MaxEntRep.from_data(json.load(handle)))
            target = convex_combine([eval_max_ent(rep) for rep in reps], [Fraction(1, 3), Fraction(2, 3)])
            with open("target.json", "w") as handle:
                handle.write(dumps_document(target.json()))
            distance = json.loads(runner.invoke(main, ["distance", "evaluated.json", "target.json"]).output)
            self.assertLess(distance["sup_distance"], 1e-12)

    def test_lift_then_corner(self) -> None:
        box = dumps_document(pr_box().json())
        lifted = invoke("lift", "nonsignalling", input=box)
        recovered = document(invoke("corner", "--n-alice", "2", "--n-bob", "2", input=lifted.output))
        self.assertEqual(recovered["values"], pr_box().json()["values"])

    def test_predicates(self) -> None:
        lifted = invoke("lift", "nonsignalling", input=dumps_document(pr_box().json()))
        report = document(invoke("predicates", input=lifted.output))
        self.assertTrue(report["valid"] and report["nonsignalling"] and report["synchronous"] and report["symmetric"])
        rectangular = document(invoke("predicates", input=dumps_document(uniform_correlation(2, 3, 2).json())))
        self.assertIsNone(rectangular["synchronous"])

    def test_membership_exit_codes(self) -> None:
        inside = invoke("membership", input=dumps_document(uniform_correlation(2, 2, 2).json()))
        self.assertEqual(inside.exit_code, ExitCode.Ok)
        self.assertTrue(MembershipVerdict.from_data(json.loads(inside.output)).inside)
        outside = invoke("membership", input=dumps_document(pr_box().json()))
        self.assertEqual(outside.exit_code, ExitCode.Negative)
        self.assertEqual(json.loads(outside.output)["status"], "outside")

    def test_bell_defaults_to_chsh(self) -> None:
        data = document(invoke("bell", input=dumps_document(pr_box().json())))
        self.assertAlmostEqual(data["value"], 1.0, places=12)
        self.assertAlmostEqual(data["classical_value"], 0.75, places=12)

    def test_validate(self) -> None:
        valid = document(invoke("validate", input=dumps_document(uniform_correlation(2, 2, 2).json())))
        self.assertEqual(valid["kind"], "correlation")
        broken = uniform_correlation(1, 1, 2).json()
        broken["values"][0] = 0.5
        result = invoke("validate", input=dumps_document(broken))
        self.assertEqual(result.exit_code, ExitCode.Negative)

    def test_approx_weights(self) -> None:
        root = 1 / np.sqrt(2)
        data = document(invoke("approx-weights", "--target", str(float(root)), "--target", str(float(1 - root)),
                               "--eps", "1e-3"))
        self.assertEqual(sum(Fraction(w) for w in data["weights"]), 1)
        self.assertLess(data["max_error"], 5e-4)

    def test_plan(self) -> None:
        plan = BlockPlan.from_data(document(invoke("plan", "--dim", "2", "--dim", "3", "--weight", "1/3",
                                                   "--weight", "2/3")))
        self.assertEqual(plan.total_dim, 18)

    def test_embed(self) -> None:
        rep = invoke("random", "rep", "--n-a", "1", "--n-b", "1", "--m", "2", "--d", "3")
        embedded = MaxEntRep.from_data(document(invoke("embed", input=rep.output)))
        self.assertEqual(embedded.d, 6)

    def test_dilate_and_round(self) -> None:
        thirds = [np.diag([1 / 3, 2 / 3]), np.diag([2 / 3, 1 / 3])]
        measure = [[[[float(v), 0.0] for v in row] for row in element] for element in thirds]
        rep = dumps_document({"kind": MeasureKind.POVM, "alice": [measure], "bob": [measure]})
        dilated = MaxEntRep.from_data(document(invoke("dilate", input=rep)))
        self.assertEqual((dilated.d, dilated.kind), (18, MeasureKind.PVM))
        shared = MaxEntRep.from_data(document(invoke("dilate", "--strategy", "shared", input=rep)))
        self.assertEqual(shared.d, 6)
        rounded = MaxEntRep.from_data(document(invoke("round-spectrum", "--eps", "1e-2", input=rep)))
        self.assertEqual(rounded.kind, MeasureKind.POVM)

    def test_schmidt(self) -> None:
        state = {"d_a": 3, "d_b": 3, "state": vector_to_pairs(maximally_entangled_state(3))}
        data = document(invoke("schmidt", input=dumps_document(state)))
        self.assertTrue(data["maximally_entangled"])
        np.testing.assert_allclose(data["coefficients"], np.full(3, 1 / np.sqrt(3)), atol=1e-12)

    def test_reports_parse_back(self) -> None:
        correlation = dumps_document(uniform_correlation(2, 2, 2).json())
        report = ValidityReport.from_data(document(invoke("validate", input=correlation)))
        self.assertTrue(report.ok)
        self.assertEqual(report.violations, [])
        pair = MarginalPair.from_data(document(invoke("marginals", input=correlation)))
        self.assertTrue(pair.well_defined)
        np.testing.assert_allclose(pair.alice, np.full((2, 2), 0.5), atol=1e-12)
        np.testing.assert_allclose(pair.bob, np.full((2, 2), 0.5), atol=1e-12)
        vector = np.array([np.sqrt(0.8), 0.0, 0.0, np.sqrt(0.2)])
        state = {"d_a": 2, "d_b": 2, "state": vector_to_pairs(vector)}
        data = document(invoke("schmidt", input=dumps_document(state)))
        self.assertFalse(data["maximally_entangled"])
        form = SchmidtForm.from_data(data)
        np.testing.assert_allclose(form.coefficients, [np.sqrt(0.8), np.sqrt(0.2)], atol=1e-12)
        np.testing.assert_allclose(form.reconstruct(), vector, atol=1e-12)

    def test_output_file(self) -> None:
        runner = CliRunner()
        with runner.isolated_filesystem():
            result = runner.invoke(main, ["--output", "chsh.json", "chsh"])
            self.assertEqual((result.exit_code, result.output), (0, ""))
            with open("chsh.json") as handle:
                self.assertIn("classical_value", json.load(handle))


class TestFailures(TestCase):

    def test_malformed_json(self) -> None:
        result = invoke("marginals", input='{"n_a": 1,\n "m": }')
        self.assertEqual(result.exit_code, ExitCode.Usage)
        self.assertIn("line 2", result.output)

    def test_unknown_command(self) -> None:
        self.assertEqual(invoke("teleport").exit_code, ExitCode.Usage)

    def test_library_error(self) -> None:
        result = invoke("corner", "--n-alice", "2", "--n-bob", "1",
                        input=dumps_document(uniform_correlation(4, 4, 2).json()))
        self.assertEqual(result.exit_code, ExitCode.Negative)

    def test_signalling_lift_refused(self) -> None:
        values = np.zeros((2, 2, 2, 2))
        for x in range(2):
            for y in range(2):
                values[x, y, y, :] = 0.5
        result = invoke("lift", "nonsignalling", input=dumps_document(Correlation(2, 2, 2, values).json()))
        self.assertEqual(result.exit_code, ExitCode.Negative)


def test_run_returns_exit_codes(tmp_path, capsys) -> None:
    source = tmp_path / "box.json"
    source.write_text(dumps_document(pr_box().json()))
    assert run(["membership", str(source)]) == ExitCode.Negative
    assert json.loads(capsys.readouterr().out)["status"] == "outside"
    assert run(["chsh"]) == ExitCode.Ok
    assert run(["nonsense"]) == ExitCode.Usage


@pytest.mark.parametrize("command", [["eval", "max-ent"], ["eval", "povm"]])
def test_eval_round_trips(command) -> None:
    rep = invoke("random", "rep", "--n-a", "2", "--n-b", "1", "--m", "2", "--d", "2", "--seed", "4")
    p = Correlation.from_data(document(invoke(*command, input=rep.output)))
    assert p.shape == (2, 1, 2, 2)


THIRDS = [[[[1 / 3, 0.0], [0.0, 0.0]], [[0.0, 0.0], [2 / 3, 0.0]]],
          [[[2 / 3, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1 / 3, 0.0]]]]


@pytest.mark.parametrize("argv, stdin", [
    (["eval", "max-ent"], '{"alice": [1], "bob": [1]}'),
    (["approx-weights", "--target", "1", "--eps", "0"], None),
    (["round-spectrum", "--eps", "0"], dumps_document({"kind": MeasureKind.POVM, "alice": [THIRDS], "bob": [THIRDS]})),
    (["random", "pvm", "--d", "2", "--m", "0"], None),
    (["schmidt"], '{"d_a": "two", "d_b": 2, "state": [[1, 0]]}'),
])
def test_bad_arguments_are_usage_errors(argv, stdin) -> None:
    assert invoke(*argv, input=stdin).exit_code == ExitCode.Usage
