import os
import sys
import json
import shutil
import tempfile
import unittest
import logging

# Add the src directory to the path so we can import our modules
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.algebra import ConfigError, Cutoffs, DegenerateLattice
from src.config import RunConfig, load_functional_file
from src.models import GeneratedSubspace, HeisenbergModel, LatticeModel, build_model

# Disable logging output during tests
logging.disable(logging.CRITICAL)


class TestRunConfig(unittest.TestCase):
    """
    Unit tests for loading, merging and validating the run configuration.
    """

    def setUp(self):
        """Set up a scratch directory for configuration files."""
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def write(self, name, payload):
        path = os.path.join(self.tmp, name)
        with open(path, 'w') as f:
            if isinstance(payload, str):
                f.write(payload)
            else:
                json.dump(payload, f)
        return path

    def test_defaults(self):
        settings = RunConfig(None).validate()
        self.assertEqual(settings.model.type, "heisenberg")
        self.assertEqual(settings.model.k, "0")
        self.assertEqual((settings.cutoffs.max_degree, settings.cutoffs.max_weight_len), (4, 2))
        self.assertEqual(settings.run.suite, "all")
        self.assertEqual(settings.run.functional, "canonical")

    def test_file_is_merged_over_defaults(self):
        path = self.write("config.json", {"cutoffs": {"max_degree": 6}, "run": {"seed": 9}})
        config = RunConfig(path)
        settings = config.validate()
        self.assertEqual(settings.cutoffs.max_degree, 6)
        self.assertEqual(settings.cutoffs.max_weight_len, 2)
        self.assertEqual(settings.run.seed, 9)
        self.assertEqual(config.get("run", "samples"), 20)

    def test_model_cutoffs_override_cutoff_section(self):
        config = RunConfig(None)
        config.set("model", "max_degree", 7)
        self.assertEqual(config.validate().cutoffs.max_degree, 7)

    def test_model_file(self):
        path = self.write("model.json", {"type": "lattice", "N": [[-2, 1], [1, -2]]})
        config = RunConfig(None)
        config.load_model_file(path)
        settings = config.validate()
        self.assertEqual(settings.model.generators, ["g1", "g2"])

    def test_unknown_keys_are_rejected(self):
        config = RunConfig(None)
        config.set("run", "bogus", 1)
        with self.assertRaises(ConfigError):
            config.validate()

    def test_bad_rationals(self):
        for k in ("1/0", 0.5, "0.5", True):
            config = RunConfig(None)
            config.set("model", "k", k)
            with self.assertRaises(ConfigError):
                config.validate()

    def test_lattice_needs_locality_matrix(self):
        config = RunConfig(None)
        config.load_model_file(self.write("model.json", {"type": "free"}))
        with self.assertRaises(ConfigError):
            config.validate()

    def test_mismatched_generator_names(self):
        config = RunConfig(None)
        config.load_model_file(self.write("model.json", {"type": "lattice", "generators": ["a"], "N": [[-2, 0], [0, -2]]}))
        with self.assertRaises(ConfigError):
            config.validate()

    def test_unreadable_files(self):
        with self.assertRaises(ConfigError):
            RunConfig(self.write("config.json", "{not json"))
        with self.assertRaises(ConfigError):
            RunConfig(None).load_model_file(os.path.join(self.tmp, "missing.json"))

    def test_create_default_config(self):
        path = os.path.join(self.tmp, "sub", "config.json")
        config = RunConfig(path)
        self.assertTrue(config.create_default_config())
        self.assertFalse(config.create_default_config())
        with open(path) as f:
            self.assertEqual(json.load(f), RunConfig.DEFAULT_CONFIG)

    def test_functional_file(self):
        spec = load_functional_file(self.write("f.json", {"values": [{"weight": [0], "values": ["1/2"]}]}))
        self.assertEqual(spec.values[0].values, ["1/2"])
        with self.assertRaises(ConfigError):
            load_functional_file(self.write("g.json", {"values": [{"weight": [0], "values": ["x"]}]}))


class TestBuildModel(unittest.TestCase):

    def build(self, model):
        config = RunConfig(None)
        config.config["model"] = model
        settings = config.validate()
        return build_model(settings.model, Cutoffs(settings.cutoffs.max_degree, settings.cutoffs.max_weight_len))

    def test_model_types(self):
        heisenberg = self.build({"type": "heisenberg", "k": "1/2"})
        self.assertIsInstance(heisenberg, HeisenbergModel)
        self.assertEqual(heisenberg.describe()["k"], "1/2")
        self.assertIsInstance(self.build({"type": "lattice", "N": [[-2]]}), LatticeModel)
        self.assertIsInstance(self.build({"type": "free", "N": [[-2]], "max_degree": 2}), GeneratedSubspace)

    def test_scan_and_generation_bounds(self):
        free = self.build({"type": "free", "N": [[4]], "max_degree": 2, "scan_excess": 4, "source_degree": 1})
        self.assertEqual((free.scan_excess, free.source_degree), (4, 1))
        self.assertEqual(free.lattice.scan_excess, 4)
        self.assertIsNone(self.build({"type": "lattice", "N": [[-2]]}).scan_excess)

    def test_shipped_free_spec_bounds_the_scans(self):
        config = RunConfig(None)
        config.load_model_file(os.path.join(os.path.dirname(__file__), "..", "model_specs", "free_n4.json"))
        settings = config.validate()
        self.assertEqual(settings.model.scan_excess, 4)
        self.assertIsNone(settings.model.source_degree)

    def test_skipped_share_range(self):
        config = RunConfig(None)
        self.assertEqual(config.validate().run.max_skipped_share, 1.0)
        config.set("run", "max_skipped_share", 2)
        with self.assertRaises(ConfigError):
            config.validate()

    def test_degenerate_lattice(self):
        with self.assertRaises(DegenerateLattice):
            self.build({"type": "lattice", "N": [[-2, 2], [2, -2]]})


if __name__ == '__main__':
    unittest.main()
