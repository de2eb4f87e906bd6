import json
import os
import shlex
from collections.abc import Callable
from os import PathLike
from pathlib import Path

from .assertions import AlgebraAssertionsMixin
from .cli_runner import CliRunnerMixin


class ReportScenarioMixin(CliRunnerMixin, AlgebraAssertionsMixin):
    """
    Runs the command line once per scenario directory.

    A directory "a" in the scenarios dir creates "test_a". It holds ``args.txt``
    with the command line (shell quoting, newlines are plain whitespace) and
    ``expected.json`` with ``{"exitCode": ..., "report": {...}}``. The report entry
    is compared as a subset of the JSON the run prints; a scenario may leave it out
    to check only the exit code. An optional ``config.json`` holds RunConfig fields
    for the run. Each run happens in an isolated working directory.

    Attributes:
        scenarios_dir: location to find scenarios
    """

    scenarios_dir: str | PathLike[str]

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        if not hasattr(cls, "scenarios_dir"):
            raise AttributeError("Please provide scenarios_dir")
        if not os.path.isdir(cls.scenarios_dir):
            raise FileNotFoundError(f"Could not find scenarios_dir {cls.scenarios_dir}")

        used_test_names = set()
        for scenario in sorted(os.listdir(cls.scenarios_dir)):
            scenario_path = os.path.join(cls.scenarios_dir, scenario)
            if not os.path.isdir(scenario_path):
                continue
            test_name = f"test_{scenario.replace('-', '_')}"
            i = 1
            while test_name in used_test_names:
                test_name = f"test_{scenario.replace('-', '_')}_{i}"
                i += 1
            used_test_names.add(test_name)
            setattr(cls, test_name, cls.generate_test(scenario, scenario_path))

    @classmethod
    def generate_test(cls, scenario_name: str, scenario_path: str) -> Callable:
        def test_func(self) -> None:
            args, expected = self._load_scenario(Path(scenario_path))
            code, stdout = self.run_cli(args)
            self.assertEqual(
                expected.get("exitCode", 0),
                code,
                f"{scenario_name} exited with {code}",
            )
            if "report" in expected:
                self.assertReportContains(expected["report"], json.loads(stdout))

        test_func.__doc__ = f"scenario {scenario_name}"
        return test_func

    def _load_scenario(self, scenario_path: Path) -> tuple[list[str], dict]:
        args_file = scenario_path / "args.txt"
        expected_file = scenario_path / "expected.json"
        if not args_file.exists():
            raise FileNotFoundError(f"Did not find args.txt in {scenario_path.name}")
        if not expected_file.exists():
            raise FileNotFoundError(
                f"Did not find expected.json in {scenario_path.name}"
            )
        config_file = scenario_path / "config.json"
        if config_file.exists():
            self.write_config(json.loads(config_file.read_text(encoding="utf-8")))
        args = shlex.split(args_file.read_text(encoding="utf-8"))
        return args, json.loads(expected_file.read_text(encoding="utf-8"))
