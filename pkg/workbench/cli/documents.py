from typing import Any, Dict, IO, Optional

import click

from membership.types import BellFunctional
from operators.types import MaxEntRep, OperatorMeasure, StateRep
from tensors.types import Correlation
from utils import dumps_document, loads_document
from utils.errors import MalformedInput


def read_document(stream: IO[str]) -> Any:
    return loads_document(stream.read())


def document_kind(data: Any) -> str:
    """correlation, functional, state, rep or measure, told apart by their keys"""
    if not isinstance(data, dict):
        raise MalformedInput("document must be a JSON object")
    if "values" in data:
        return "correlation"
    if "coefficients" in data and "n_a" in data:
        return "functional"
    if "alice" in data and "state" in data:
        return "state"
    if "alice" in data:
        return "rep"
    if "elements" in data:
        return "measure"
    raise MalformedInput(f"unrecognised document with keys {sorted(data)}")


def read_correlation(stream: IO[str]) -> Correlation:
    return Correlation.from_data(read_document(stream))


def read_rep(stream: IO[str]) -> MaxEntRep:
    return MaxEntRep.from_data(read_document(stream))


def read_state_rep(stream: IO[str]) -> StateRep:
    return StateRep.from_data(read_document(stream))


def read_functional(stream: IO[str]) -> BellFunctional:
    return BellFunctional.from_data(read_document(stream))


PARSERS = {
    "correlation": Correlation.from_data,
    "functional": BellFunctional.from_data,
    "state": StateRep.from_data,
    "rep": MaxEntRep.from_data,
    "measure": OperatorMeasure.from_data,
}


def parse_any(data: Dict[str, Any]) -> Any:
    return PARSERS[document_kind(data)](data)


def emit(data: Dict[str, Any], output: Optional[str]) -> None:
    """One JSON document per invocation, to --output when given"""
    text = dumps_document(data)
    if output:
        with open(output, "w") as handle:
            handle.write(text + "\n")
    else:
        click.echo(text)
