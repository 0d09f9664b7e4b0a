from .model import (
    AnalyzeArgs,
    SynthesizeArgs,
    VerifyBoundArgs,
    ConjectureArgs,
    IdentityArgs,
    IterateArgs,
    CoverageArgs,
    BasinsArgs,
    ExemplarArgs,
    CliArgs,
)
from .parse import parse_arguments

__all__ = [
    "AnalyzeArgs",
    "SynthesizeArgs",
    "VerifyBoundArgs",
    "ConjectureArgs",
    "IdentityArgs",
    "IterateArgs",
    "CoverageArgs",
    "BasinsArgs",
    "ExemplarArgs",
    "CliArgs",
    "parse_arguments",
]
