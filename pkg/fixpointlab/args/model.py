from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, Field, PositiveFloat, conint

from ..analysis.classify import EPS_CLASS, EPS_LINE
from ..dynamics.orbit import CONV_TOL, MAX_STEPS
from ..rootfind import RootFindConfig
from ..sampling import SamplingStrategy


Strategy = Literal["coefficient", "fixed-point"]


class OutputArgs(BaseModel):
    output: Optional[Path] = Field(
        default=None,
        description="write the result to this file instead of standard output",
    )


class InputArgs(OutputArgs):
    input: Optional[Path] = Field(
        default=None,
        description=(
            "read JSON documents from this file " +
            "(default: standard input)"
        ),
    )
    inline: Optional[str] = Field(
        default=None,
        description="inline JSON document, used instead of --input",
    )


class RootFindArgs(BaseModel):
    tol: PositiveFloat = Field(
        default=1e-12,
        description="relative residual target of root finding",
    )
    max_iter: conint(ge=1) = Field(  # type: ignore[valid-type]
        default=200,
        description="maximum sweeps of simultaneous root iteration",
    )
    root_seed: conint(ge=0, lt=2**64) = Field(  # type: ignore[valid-type]
        default=0,
        description="seed rotating the initial root guesses",
    )

    def rootfind(self) -> RootFindConfig:
        return RootFindConfig(
            tol=self.tol,
            max_iter=self.max_iter,
            seed=self.root_seed,
        )


class ClassifyArgs(RootFindArgs):
    eps_class: PositiveFloat = Field(
        default=EPS_CLASS,
        description="multipliers within 1 +- eps_class in modulus are neutral",
    )


class SamplingArgs(BaseModel):
    seed: Optional[conint(ge=0, lt=2**64)] = Field(  # type: ignore[valid-type]
        default=None,
        description="run seed (generated and printed when omitted)",
    )
    strategy: Strategy = Field(
        default="coefficient",
        description="how random polynomials are drawn",
    )
    workers: Optional[conint(ge=1)] = Field(  # type: ignore[valid-type]
        default=None,
        description="number of worker processes (default: CPU count)",
    )

    def sampling_strategy(self) -> SamplingStrategy:
        return SamplingStrategy(self.strategy)


class AnalyzeArgs(InputArgs, ClassifyArgs):
    eps_line: PositiveFloat = Field(
        default=EPS_LINE,
        description="collinearity tolerance relative to the point spread",
    )


class SynthesizeArgs(InputArgs):
    pass


class VerifyBoundArgs(InputArgs, ClassifyArgs, SamplingArgs):
    eps_line: PositiveFloat = Field(
        default=EPS_LINE,
        description="collinearity tolerance relative to the point spread",
    )
    degree: Optional[conint(ge=2)] = Field(  # type: ignore[valid-type]
        default=None,
        description="check a random stream of this degree instead of input",
    )
    samples: conint(ge=1) = Field(  # type: ignore[valid-type]
        default=10_000,
        description="size of the random stream",
    )


class ConjectureArgs(OutputArgs, RootFindArgs, SamplingArgs):
    degree: conint(ge=2) = Field(  # type: ignore[valid-type]
        description="degree of the sampled polynomials",
    )
    samples: conint(ge=1) = Field(  # type: ignore[valid-type]
        default=10_000,
        description="number of polynomials to probe",
    )


class IdentityArgs(InputArgs, RootFindArgs):
    pass


class IterateArgs(InputArgs):
    x0_re: float = Field(default=0.0, description="real part of the seed")
    x0_im: float = Field(default=0.0, description="imaginary part of the seed")
    max_steps: conint(ge=1) = Field(  # type: ignore[valid-type]
        default=MAX_STEPS,
        description="maximum number of iterations",
    )
    conv_tol: PositiveFloat = Field(
        default=CONV_TOL,
        description="stop once consecutive iterates are this close",
    )
    escape_radius: Optional[PositiveFloat] = Field(
        default=None,
        description="escape radius (default: 2 (1 + Cauchy bound))",
    )


class CoverageArgs(InputArgs, ClassifyArgs):
    max_steps: conint(ge=1) = Field(  # type: ignore[valid-type]
        default=MAX_STEPS,
        description="maximum iterations per critical orbit",
    )
    conv_tol: PositiveFloat = Field(
        default=CONV_TOL,
        description="stop once consecutive iterates are this close",
    )


class BasinsArgs(InputArgs, ClassifyArgs):
    output: Path = Field(description="PPM image to write")
    sidecar: Optional[Path] = Field(
        default=None,
        description="JSON sidecar to write (default: output + .json)",
    )
    width: conint(ge=1, le=16384) = Field(  # type: ignore[valid-type]
        default=256,
        description="image width in pixels",
    )
    height: conint(ge=1, le=16384) = Field(  # type: ignore[valid-type]
        default=256,
        description="image height in pixels",
    )
    center_re: float = Field(default=0.0, description="real part of center")
    center_im: float = Field(
        default=0.0,
        description="imaginary part of center",
    )
    half_width: PositiveFloat = Field(
        default=2.0,
        description="half of the horizontal extent of the window",
    )
    max_steps: conint(ge=1) = Field(  # type: ignore[valid-type]
        default=MAX_STEPS,
        description="maximum iterations per pixel",
    )
    conv_tol: PositiveFloat = Field(
        default=CONV_TOL,
        description="stop once consecutive iterates are this close",
    )
    workers: Optional[conint(ge=1)] = Field(  # type: ignore[valid-type]
        default=None,
        description="number of worker processes rendering rows",
    )


class ExemplarArgs(OutputArgs):
    n: conint(ge=2) = Field(  # type: ignore[valid-type]
        description="family member: (-z^(n+1) + (n+1) z) / n",
    )


class CliArgs(BaseModel):
    verbose: bool = Field(
        default=False,
        description="enable output of logged debug",
    )

    analyze: Optional[AnalyzeArgs] = Field(
        description="classify fixed points, check the collinear bound " +
        "and the conjecture margin",
    )
    synthesize: Optional[SynthesizeArgs] = Field(
        description="build the Hermite interpolant of prescribed " +
        "fixed points and multipliers",
    )
    verify_bound: Optional[VerifyBoundArgs] = Field(
        alias="verify-bound",
        description="check the collinear bound over a corpus or " +
        "a random stream",
    )
    conjecture: Optional[ConjectureArgs] = Field(
        description="search random polynomials for a conjecture violation",
    )
    identity: Optional[IdentityArgs] = Field(
        description="exact quadratic and cubic multiplier identities",
    )
    iterate: Optional[IterateArgs] = Field(
        description="dump the orbit of a seed",
    )
    coverage: Optional[CoverageArgs] = Field(
        description="check that critical orbits reach every attractor",
    )
    basins: Optional[BasinsArgs] = Field(
        description="render basins of attraction as PPM",
    )
    exemplar: Optional[ExemplarArgs] = Field(
        description="emit the polynomial with n attractive roots of unity",
    )

    class Config:
        allow_population_by_field_name = True

    def command(self) -> Optional[tuple[str, BaseModel]]:
        for name in self.__fields__:
            value = getattr(self, name)
            if isinstance(value, BaseModel):
                return self.__fields__[name].alias, value
        return None
