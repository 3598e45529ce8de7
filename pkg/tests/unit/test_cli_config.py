import pydantic
import pytest

from src.cli.config import RunConfig
from src.cli.main import build_parser


def test_canonical_round_trip():
    config = RunConfig(command="verify", suites=["thm6", "thm5"], seed=7, epsilons=["1/5"])
    assert RunConfig(**config.canonical()) == config
    assert list(config.canonical()) == sorted(config.canonical())


@pytest.mark.parametrize("field,value", [("tol", "abc"), ("tol", "-1"), ("rule", "simpson"), ("z", "x")])
def test_invalid_values(field, value):
    with pytest.raises(pydantic.ValidationError):
        RunConfig(command="eval", **{field: value})


def test_precision_floor():
    with pytest.raises(pydantic.ValidationError):
        RunConfig(command="quad", precision=32)


def test_namespace_falls_back_to_settings():
    args = build_parser().parse_args(["quad", "--n", "3"])
    config = RunConfig.from_namespace(args)
    assert config.n == 3
    assert config.tol == "1e-12"
    assert config.precision == 128
    assert config.rule == "gauss-legendre"


def test_flags_override_settings():
    args = build_parser().parse_args(["quad", "--tol", "1e-8", "--precision", "96", "--rule", "clenshaw-curtis"])
    config = RunConfig.from_namespace(args)
    assert (config.tol, config.precision, config.rule) == ("1e-8", 96, "clenshaw-curtis")


def test_repeatable_flags():
    args = build_parser().parse_args(["verify", "--suite", "thm5", "--suite", "thm6", "--epsilon", "1/5"])
    config = RunConfig.from_namespace(args)
    assert config.suites == ["thm5", "thm6"]
    assert config.epsilons == ["1/5"]
