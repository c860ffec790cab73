#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
命令行接口模块 - 命令定义

定义 subdyn 的各个子命令与全局参数，使用Typer库构建命令行界面。
报告写到标准输出，日志与错误信息写到标准错误。
"""

from typing import Callable, Iterable, List, Optional

import mpmath
import typer
from rich.console import Console

from src.cli import reports
from src.cli.jobs import load_job
from src.core.processor import JobProcessor
from src.dynamics.orbit import OrbitReport
from src.dynamics.subvariety import Subvariety
from src.heights.search import SearchReport
from src.utils.config import get_active_config, load_config, set_active_config
from src.utils.exceptions import SubdynError
from src.utils.logger import setup_logger

# 创建Typer应用
app = typer.Typer(
    name="subdyn",
    help="射影空间子簇的算术动力学 - 像、Chow形式、高度与约化周期的精确计算",
    add_completion=False,
)

# 创建Rich控制台（标准错误）
console = Console(stderr=True, highlight=False)

JOB_HELP = "任务文件路径（JSON）"


def _real(value: str) -> str:
    try:
        mpmath.mpf(value)
    except (ValueError, TypeError) as e:
        raise typer.BadParameter(f"不是合法的实数: {value}") from e
    return value


def _partial_lines(partial) -> List[str]:
    if isinstance(partial, OrbitReport):
        return reports.orbit_lines(partial)
    if isinstance(partial, SearchReport):
        return reports.search_lines(partial, get_active_config().real_precision_bits)
    return []


def _run(action: Callable[[JobProcessor], Iterable[str]]) -> None:
    """执行一个子命令，把库异常映射为退出码"""
    processor = JobProcessor(get_active_config())
    try:
        lines = list(action(processor))
    except SubdynError as e:
        console.print(f"错误: {str(e)}", style="bold red", markup=False)
        partial = getattr(e, "partial", None)
        if partial is not None:
            typer.echo(reports.render(["partial=true"] + _partial_lines(partial)), nl=False)
        raise typer.Exit(e.exit_code)
    typer.echo(reports.render(lines), nl=False)


@app.callback()
def callback(
    ctx: typer.Context,
    config_file: Optional[str] = typer.Option(None, "--config", "-c", help="配置文件路径"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="显示详细日志"),
    budget: Optional[int] = typer.Option(None, "--budget", min=1, help="Gröbner基的S对预算"),
    threads: Optional[int] = typer.Option(None, "--threads", min=1, help="搜索与枚举的线程数"),
    seed: Optional[int] = typer.Option(None, "--seed", help="随机数种子"),
):
    """射影空间子簇的算术动力学工具"""
    try:
        config = load_config(config_file)
    except SubdynError as e:
        console.print(f"错误: {str(e)}", style="bold red", markup=False)
        raise typer.Exit(e.exit_code)

    # 命令行参数覆盖配置文件
    updates = {}
    if budget is not None:
        updates["groebner_pair_budget"] = budget
    if threads is not None:
        updates["threads"] = threads
    if seed is not None:
        updates["seed"] = seed
    config = config.model_copy(update=updates)

    log_level = "DEBUG" if verbose else config.log_level
    setup_logger(config.log_dir, log_level, ctx.invoked_subcommand or "-")
    set_active_config(config)


@app.command("image")
def image(
    job: str = typer.Option(..., "--job", help=JOB_HELP),
    method: str = typer.Option("groebner", "--method", help="groebner 或 resultant（只适用于超曲面）"),
):
    """子簇在态射下的正像"""
    def action(p: JobProcessor):
        result = p.image(load_job(job), method)
        if isinstance(result, Subvariety):
            return reports.variety_lines(result)
        return reports.image_result_lines(result)
    _run(action)


@app.command("preimage")
def preimage(
    job: str = typer.Option(..., "--job", help=JOB_HELP),
    reduced: Optional[bool] = typer.Option(None, "--reduced/--no-reduced", help="是否取根理想"),
):
    """子簇在态射下的原像"""
    _run(lambda p: reports.variety_lines(p.preimage(load_job(job), reduced)))


@app.command("orbit")
def orbit(
    job: str = typer.Option(..., "--job", help=JOB_HELP),
    prime: Optional[int] = typer.Option(None, "--prime", help="先约化到 F_p"),
    max_steps: Optional[int] = typer.Option(None, "--max-steps", min=1, help="最大步数"),
    degree_cap: Optional[int] = typer.Option(None, "--degree-cap", min=1, help="次数上限"),
):
    """迭代子簇的轨道，检测尾长与周期"""
    _run(lambda p: reports.orbit_lines(p.orbit(load_job(job), prime, max_steps, degree_cap)))


@app.command("chow")
def chow(job: str = typer.Option(..., "--job", help=JOB_HELP)):
    """子簇的 Chow 形式"""
    _run(lambda p: reports.chow_lines(p.chow(load_job(job))))


@app.command("induced-map")
def induced_map(
    job: str = typer.Option(..., "--job", help=JOB_HELP),
    big_d: Optional[int] = typer.Option(None, "--D", min=1, help="子簇次数"),
    t: Optional[int] = typer.Option(None, "--t", min=1, help="余维数"),
):
    """态射在 Chow 坐标上诱导的映射"""
    _run(lambda p: reports.induced_map_lines(p.induced_map(load_job(job), big_d, t)))


@app.command("discriminant")
def discriminant(
    job: str = typer.Option(..., "--job", help=JOB_HELP),
    big_d: Optional[int] = typer.Option(None, "--D", min=1, help="超曲面次数"),
    k: Optional[int] = typer.Option(None, "--k", min=1, help="判别轨迹的序号"),
):
    """次数退化的判别轨迹 Z_k 及其线性分量"""
    def action(p: JobProcessor):
        Z, order, parts, restrictions = p.discriminant(load_job(job), big_d, k)
        return reports.discriminant_lines(Z, order, parts, restrictions)
    _run(action)


@app.command("height")
def height(job: str = typer.Option(..., "--job", help=JOB_HELP)):
    """子簇（Chow 形式）与态射的高度"""
    def action(p: JobProcessor):
        h_X, h_f = p.height(load_job(job))
        return reports.height_lines(h_X, h_f, p.config.real_precision_bits)
    _run(action)


@app.command("canonical-height")
def canonical_height(
    job: str = typer.Option(..., "--job", help=JOB_HELP),
    iters: Optional[int] = typer.Option(None, "--iters", min=0, help="迭代次数"),
):
    """超曲面的典范高度近似值与截断误差"""
    def action(p: JobProcessor):
        return reports.estimate_lines(p.canonical_height(load_job(job), iters), p.config.real_precision_bits)
    _run(action)


@app.command("constants")
def constants(
    n: int = typer.Option(..., "--N", min=1, help="射影空间维数"),
    d: int = typer.Option(..., "--d", min=2, help="态射次数"),
    big_d: int = typer.Option(..., "--D", min=1, help="超曲面次数"),
    hf: str = typer.Option(..., "--hf", callback=_real, help="态射高度 h(f)"),
    image_degree: Optional[int] = typer.Option(None, "--image-degree", min=1, help="像的次数 D'"),
    example_literal: bool = typer.Option(False, "--example-literal", help="重现算例中印出的算术"),
):
    """显式高度常数 C(f, N, D)"""
    _run(lambda p: reports.constant_lines(p.constants(n, d, big_d, hf, image_degree, example_literal)))


@app.command("diff-bound")
def diff_bound(
    c: str = typer.Option(..., "--C", callback=_real, help="高度常数 C"),
    big_d: int = typer.Option(..., "--D", min=1, help="子簇次数"),
    d: int = typer.Option(..., "--d", min=2, help="态射次数"),
    n: int = typer.Option(..., "--N", min=1, help="射影空间维数"),
    t: int = typer.Option(..., "--t", min=1, help="余维数"),
):
    """典范高度与高度之差的上界"""
    def action(p: JobProcessor):
        bound = p.diff_bound(c, big_d, d, n, t)
        return [reports.kv(bound=bound), reports.kv(precision=p.config.real_precision_bits)]
    _run(action)


@app.command("good-reduction")
def good_reduction(
    job: str = typer.Option(..., "--job", help=JOB_HELP),
    prime: Optional[int] = typer.Option(None, "--prime", help="素数 p"),
):
    """判断 p 是否为态射的好约化素数"""
    _run(lambda p: reports.good_reduction_lines(*p.good_reduction(load_job(job), prime)))


@app.command("residue-period")
def residue_period(
    job: str = typer.Option(..., "--job", help=JOB_HELP),
    prime: Optional[int] = typer.Option(None, "--prime", help="好约化素数 p"),
    max_steps: Optional[int] = typer.Option(None, "--max-steps", min=1, help="最大步数"),
    check_degrees: bool = typer.Option(False, "--check-degrees", help="比较有理迭代与模 p 迭代的次数"),
):
    """子簇约化到剩余域后的周期"""
    _run(lambda p: reports.residue_lines(p.residue_period(load_job(job), prime, max_steps, check_degrees)))


@app.command("period-bound")
def period_bound(
    prime: int = typer.Option(..., "--prime", help="有理素数 p"),
    ramification: int = typer.Option(1, "--ramification", min=1, help="分歧指数 v"),
    m: int = typer.Option(..., "--m", min=1, help="剩余域上的周期"),
    r: Optional[int] = typer.Option(None, "--r", min=1, help="乘子的阶，缺省时用 #GL 代替"),
    s: int = typer.Option(1, "--s", min=1, help="扩张指数"),
    n: int = typer.Option(..., "--N", min=1, help="射影空间维数"),
    big_d: int = typer.Option(1, "--D", min=1, help="子簇次数"),
    q: Optional[int] = typer.Option(None, "--q", help="剩余域大小，默认为 p"),
    big_m: Optional[int] = typer.Option(None, "--M", min=0, help="GL 的维数减一，默认为 Veronese 维数"),
):
    """好约化周期上界 s·m·r·p^⌊e⌋"""
    def action(p: JobProcessor):
        report = p.period_bound(p=prime, v=ramification, m=m, r=r, s=s, N=n, D=big_d, q=q, M=big_m)
        return reports.period_bound_lines(report, p.config.real_precision_bits)
    _run(action)


@app.command("search-preperiodic")
def search_preperiodic(
    job: str = typer.Option(..., "--job", help=JOB_HELP),
    d_max: Optional[int] = typer.Option(None, "--D-max", min=1, help="最大次数"),
    coeff_bound: Optional[int] = typer.Option(None, "--coeff-bound", min=0, help="系数绝对值上界"),
    iters: Optional[int] = typer.Option(None, "--iters", min=1, help="每个候选的迭代次数"),
    threads: Optional[int] = typer.Option(None, "--threads", min=1, help="线程数"),
):
    """在有界次数与系数的超曲面中搜索前周期者"""
    def action(p: JobProcessor):
        report = p.search_preperiodic(load_job(job), d_max, coeff_bound, iters, threads)
        return reports.search_lines(report, p.config.real_precision_bits)
    _run(action)


@app.command("exhaustive-period")
def exhaustive_period(
    prime: int = typer.Option(..., "--prime", help="素数 p"),
    n: int = typer.Option(..., "--N", min=1, help="射影空间维数"),
    d: int = typer.Option(..., "--d", min=1, help="态射次数"),
    degree_cap: int = typer.Option(..., "--degree-cap", min=1, help="迭代次数上限"),
    max_steps: Optional[int] = typer.Option(None, "--max-steps", min=1, help="每条轨道的最大步数"),
    expected: Optional[int] = typer.Option(None, "--expected", min=1, help="期望的最大周期"),
):
    """穷举 F_p 上的态射与有理超平面，寻找最大周期"""
    _run(lambda p: reports.exhaustive_lines(p.exhaustive(prime, n, d, degree_cap, max_steps, expected)))


@app.command("counts")
def counts(
    q: int = typer.Option(..., "--q", help="剩余域大小（素数幂）"),
    n: int = typer.Option(..., "--N", min=1, help="射影空间维数"),
    big_m: Optional[int] = typer.Option(None, "--M", min=0, help="GL 的维数减一，默认为 Veronese 维数"),
    t: int = typer.Option(1, "--t", min=1, help="余维数"),
    big_d: int = typer.Option(1, "--D", min=1, help="次数"),
):
    """剩余域上的群阶、点数与候选 Chow 形式个数"""
    def action(p: JobProcessor):
        M, gl_order, points, chow_count, candidates = p.counts(q, n, t, big_d, big_m)
        return reports.count_lines(q, n, M, t, big_d, gl_order, points, chow_count, candidates)
    _run(action)


@app.command("version")
def version():
    """显示版本信息"""
    from src import __version__
    typer.echo(f"subdyn v{__version__}")
