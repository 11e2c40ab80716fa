import os
import sys
import io
import json
import shutil
import tempfile
import unittest
import logging
from contextlib import redirect_stdout

# Add the src directory to the path so we can import our modules
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.main import EXIT_CONFIG, EXIT_CUTOFF, EXIT_FAILED, EXIT_OK, main, parse_arguments

# Disable logging output during tests
logging.disable(logging.CRITICAL)


class TestCommandLine(unittest.TestCase):
    """
    End-to-end tests of the command-line front end.

    Every run points --config at a scratch directory so no config.json in the
    working directory is read or written.
    """

    def setUp(self):
        """Set up a scratch directory and a small Heisenberg model file."""
        self.tmp = tempfile.mkdtemp()
        self.config = os.path.join(self.tmp, "config.json")
        self.heisenberg = self.write("heisenberg.json", {"type": "heisenberg", "k": "0", "max_degree": 4})

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def write(self, name, payload):
        path = os.path.join(self.tmp, name)
        with open(path, 'w') as f:
            json.dump(payload, f)
        return path

    def run_cli(self, *args):
        out = io.StringIO()
        with redirect_stdout(out):
            code = main(["--config", self.config, *args])
        return code, out.getvalue()

    def test_parse_arguments(self):
        args = parse_arguments(["--seed", "3", "verify", "--suite", "sl2"])
        self.assertEqual((args.command, args.seed, args.suite), ("verify", 3, "sl2"))
        args = parse_arguments(["gram", "--degree", "2", "--weight", "1,0"])
        self.assertEqual((args.degree, args.weight), (2, "1,0"))

    def test_init(self):
        code, out = self.run_cli("init")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(os.path.exists(self.config))
        code, out = self.run_cli("init")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("already exists", out)

    def test_dims(self):
        code, out = self.run_cli("--model", self.heisenberg, "dims")
        self.assertEqual(code, EXIT_OK)
        payload = json.loads(out)
        self.assertEqual(payload["model"]["type"], "heisenberg")
        self.assertEqual([row["dimension"] for row in payload["dimensions"]], [1, 1, 2, 3, 5])

    def test_dims_is_the_default_command(self):
        code, out = self.run_cli("--model", self.heisenberg)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(json.loads(out)["dimensions"]), 5)

    def test_dims_csv(self):
        code, out = self.run_cli("--model", self.heisenberg, "--format", "csv", "dims")
        self.assertEqual(code, EXIT_OK)
        lines = out.strip().splitlines()
        self.assertEqual(lines[0], "weight,degree,dimension")
        self.assertEqual(lines[1], "0,0,1")
        self.assertEqual(lines[-1], "0,4,5")

    def test_gram(self):
        code, out = self.run_cli("--model", self.heisenberg, "gram", "--degree", "2")
        self.assertEqual(code, EXIT_OK)
        payload = json.loads(out)
        self.assertEqual(payload["gram"], [["-2", "0"], ["0", "2"]])
        self.assertEqual(payload["block"]["weight"], [0])

    def test_gram_beyond_cutoff(self):
        code, out = self.run_cli("--model", self.heisenberg, "gram", "--degree", "6")
        self.assertEqual(code, EXIT_CUTOFF)
        payload = json.loads(out)
        self.assertEqual(payload["error"], "cutoff_exceeded")
        self.assertEqual(payload["required_degree"], 6)

    def test_malformed_weight(self):
        code, _ = self.run_cli("--model", self.heisenberg, "gram", "--degree", "1", "--weight", "1,x")
        self.assertEqual(code, EXIT_CONFIG)

    def test_radical_and_forms(self):
        code, out = self.run_cli("--model", self.heisenberg, "radical")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["status"], "zero")
        code, out = self.run_cli("--model", self.heisenberg, "forms")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["forms"], [{"weight": [0], "dimension": 1, "exact": True}])

    def test_central_charge(self):
        model = self.write("k.json", {"type": "heisenberg", "k": "1/2", "max_degree": 3})
        code, out = self.run_cli("--model", model, "central-charge")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["central_charge"], "-2")

    def test_verify_is_deterministic(self):
        args = ("--model", self.heisenberg, "--max-degree", "3", "--seed", "5", "--samples", "4",
                "verify", "--suite", "adjoint")
        first = self.run_cli(*args)
        second = self.run_cli(*args)
        self.assertEqual(first, second)
        code, out = first
        self.assertEqual(code, EXIT_OK)
        payload = json.loads(out)
        self.assertTrue(payload["summary"]["passed"])
        self.assertEqual(payload["summary"]["seed"], 5)

    def test_corrupted_cocycle_fails_axioms(self):
        model = self.write("broken.json", {"type": "lattice", "N": [[-2]], "cocycle_flips": [[[1], [-1]]],
                                           "max_degree": 2})
        code, out = self.run_cli("--model", model, "--samples", "0", "verify", "--suite", "axioms")
        self.assertEqual(code, EXIT_FAILED)
        payload = json.loads(out)
        self.assertFalse(payload["summary"]["passed"])
        self.assertIsNotNone(payload["summary"]["witness"])

    def test_configuration_errors(self):
        degenerate = self.write("odd.json", {"type": "lattice", "N": [[1]]})
        self.assertEqual(self.run_cli("--model", degenerate, "dims")[0], EXIT_CONFIG)
        bad_k = self.write("bad.json", {"type": "heisenberg", "k": "1/0"})
        self.assertEqual(self.run_cli("--model", bad_k, "dims")[0], EXIT_CONFIG)
        with open(self.config, 'w') as f:
            json.dump({"unknown": {}}, f)
        self.assertEqual(self.run_cli("dims")[0], EXIT_CONFIG)

    def test_invalid_functional(self):
        model = self.write("k1.json", {"type": "heisenberg", "k": "1", "max_degree": 3})
        functional = self.write("f.json", {"values": [{"weight": [0], "values": ["1"]}]})
        code, _ = self.run_cli("--model", model, "--functional", functional, "gram", "--degree", "1")
        self.assertEqual(code, EXIT_CONFIG)


if __name__ == '__main__':
    unittest.main()
