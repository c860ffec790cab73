#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""命令行：报告格式、任务文件校验与退出码"""

import json

import pytest
from typer.testing import CliRunner

from src import __version__
from src.cli.commands import app
from src.utils.logger import setup_logger

runner = CliRunner()


@pytest.fixture(autouse=True)
def restore_logger():
    yield
    # 命令行回调会把日志指向 CliRunner 的临时 stderr
    setup_logger(log_level="WARNING")


def _invoke(*args):
    return runner.invoke(app, [str(a) for a in args])


def _write_job(tmp_path, data, name="job.json"):
    path = tmp_path / name
    path.write_text(data if isinstance(data, str) else json.dumps(data), encoding="utf-8")
    return path


def test_image_of_example_line(jobs_dir):
    result = _invoke("image", "--job", jobs_dir / "ex31.json")
    assert result.exit_code == 0
    assert "variety=V(y^2 + x*z)" in result.output
    assert "dimension=1 degree=2" in result.output


def test_orbit_reports_tail_and_period(jobs_dir):
    result = _invoke("orbit", "--job", jobs_dir / "ex31.json", "--prime", 2)
    assert result.exit_code == 0
    assert "step=0 degree=1 basis=y + z" in result.output
    assert "tail=0 period=4" in result.output


def test_orbit_rejects_conflicting_prime(jobs_dir):
    result = _invoke("orbit", "--job", jobs_dir / "ex31.json", "--prime", 3)
    assert result.exit_code == 3


def test_constants_of_worked_example():
    result = _invoke("constants", "--N", 2, "--d", 2, "--D", 1, "--hf", 0)
    assert result.exit_code == 0
    assert "mode=formula" in result.output
    assert "tau_D=6 e_D=22" in result.output
    assert "binomial=33649" in result.output
    assert "precision=80" in result.output


def test_constants_example_literal_mode():
    result = _invoke("constants", "--N", 2, "--d", 2, "--D", 1, "--hf", 0, "--example-literal")
    assert result.exit_code == 0
    assert "mode=example-literal" in result.output
    assert "binomial=8008" in result.output


def test_constants_reject_non_real_height():
    result = _invoke("constants", "--N", 2, "--d", 2, "--D", 1, "--hf", "abc")
    assert result.exit_code == 2


def test_counts_on_projective_line():
    result = _invoke("counts", "--q", 2, "--N", 1, "--M", 1)
    assert result.exit_code == 0
    assert "gl_order=6 projective_points=3" in result.output


def test_good_reduction_of_conic_map(jobs_dir):
    result = _invoke("good-reduction", "--job", jobs_dir / "conic_family.json", "--prime", 3)
    assert result.exit_code == 0
    assert "p=3 good_reduction=true" in result.output


def test_period_bound_substitutes_group_order():
    result = _invoke("period-bound", "--prime", 3, "--m", 2, "--N", 2)
    assert result.exit_code == 0
    assert "r=11232 r_substituted=true" in result.output
    assert f"bound={2 * 11232 * 3}" in result.output


def test_period_bound_rejects_composite_prime():
    result = _invoke("period-bound", "--prime", 4, "--m", 1, "--N", 1)
    assert result.exit_code == 3


def test_version():
    result = _invoke("version")
    assert result.exit_code == 0
    assert f"subdyn v{__version__}" in result.output


def test_missing_job_file(tmp_path):
    result = _invoke("image", "--job", tmp_path / "absent.json")
    assert result.exit_code == 2


_BASE = {"N": 2, "morphism": ["x0^2", "x1^2", "x2^2"], "variety": ["x0"]}


def _job(**changes):
    data = dict(_BASE)
    data.update(changes)
    return data


@pytest.mark.parametrize("content, location", [
    ("{not json", "JSON"),
    ("[1, 2, 3]", "JSON"),
    (_job(colour="red"), "colour"),
    (_job(N="two"), "N"),
    (_job(N=0), "N"),
    (_job(field="rationals"), "field"),
    (_job(field={"kind": "complex"}), "field.kind"),
    (_job(field={"kind": "prime"}), "field"),
    (_job(field={"kind": "prime", "p": 6}), "field"),
    (_job(field={"kind": "rationals", "p": 3}), "field"),
    (_job(field={"kind": "parameters", "parameters": []}), "field"),
    (_job(field={"kind": "parameters", "parameters": ["1a"]}), "parameters[0]"),
    (_job(field={"kind": "parameters", "parameters": ["x0"]}), "variables"),
    (_job(variables=["x", "y"]), "variables"),
    (_job(variables=["x", "x", "z"]), "variables"),
    (_job(variables=["x", "y z", "w"]), "variables[1]"),
    (_job(morphism=["x0^2", "x1^2"]), "morphism"),
    (_job(morphism="x0^2"), "morphism"),
    (_job(morphism=["x0^2 + x1", "x1^2", "x2^2"]), "morphism[0]"),
    (_job(morphism=["x0^2", "x1", "x2^2"]), "morphism"),
    (_job(morphism=["x0^2", "x1^2", "w^2"]), "morphism[2]"),
    (_job(morphism=["x0^2", "x1^^2", "x2^2"]), "morphism[1]"),
    (_job(variety=[]), "variety"),
    (_job(variety=["x0 + x1^2"]), "variety[0]"),
    (_job(options={"bogus": 1}), "options.bogus"),
    (_job(options={"max_steps": -1}), "options.max_steps"),
])
def test_malformed_jobs_exit_with_validation_code(tmp_path, content, location):
    result = _invoke("image", "--job", _write_job(tmp_path, content))
    assert result.exit_code == 2
    assert location in result.output


def test_unknown_command_is_a_usage_error(jobs_dir):
    assert _invoke("frobnicate", "--job", jobs_dir / "ex31.json").exit_code == 2


@pytest.mark.parametrize("budget", [0, -1])
def test_non_positive_budget_is_rejected(jobs_dir, budget):
    assert _invoke("--budget", budget, "image", "--job", jobs_dir / "ex31.json").exit_code == 2


def test_precondition_failure_exit_code(tmp_path):
    job = _write_job(tmp_path, {"N": 2, "morphism": ["x0^2", "x0*x1", "x2^2"], "variety": ["x0"]})
    result = _invoke("image", "--job", job)
    assert result.exit_code == 3


def test_budget_failure_exit_code(jobs_dir):
    result = _invoke("--budget", 1, "image", "--job", jobs_dir / "ex31.json")
    assert result.exit_code == 4


def test_budget_from_config_file(tmp_path, jobs_dir):
    config = _write_job(tmp_path, {"groebner_pair_budget": 1}, name="config.json")
    result = _invoke("--config", config, "image", "--job", jobs_dir / "ex31.json")
    assert result.exit_code == 4


def test_malformed_config_file(tmp_path, jobs_dir):
    config = _write_job(tmp_path, {"groebner_pair_budget": 0}, name="config.json")
    result = _invoke("--config", config, "image", "--job", jobs_dir / "ex31.json")
    assert result.exit_code == 2


def test_log_file_is_named_after_command(tmp_path):
    log_dir = tmp_path / "logs"
    config = _write_job(tmp_path, {"log_dir": str(log_dir)}, name="config.json")
    result = _invoke("--config", config, "--verbose", "counts", "--q", 2, "--N", 1, "--M", 1)
    assert result.exit_code == 0
    setup_logger(log_level="WARNING")
    content = (log_dir / "subdyn_counts.log").read_text(encoding="utf-8")
    assert "counts/" in content
    assert "日志系统初始化完成" in content
