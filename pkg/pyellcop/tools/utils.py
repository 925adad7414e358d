import importlib
import os
import tempfile
import time
from contextlib import contextmanager
from typing import Iterator

import numpy as np


def get_dynamic_class(module_name: str, class_name: str) -> type:
    """
    Get a class dynamically.

    :param module_name: The name of the module
    :type module_name: str
    :param class_name: The name of the class
    :type class_name: str

    :returns: The class
    :rtype: type
    """

    module = importlib.import_module(module_name)
    return getattr(module, class_name)


def dynamic_class_loader(
    module_name: str, class_name: str, init_params: dict | None = None
) -> object:
    """
    Load a class dynamically and create an instance of it.

    :param module_name: The name of the module
    :type module_name: str
    :param class_name: The name of the class
    :type class_name: str
    :param init_params: The parameters to pass to the class constructor
    :type init_params: dict | None

    :returns: The class instance
    :rtype: object
    """

    return get_dynamic_class(module_name, class_name)(**(init_params or {}))


def derive_seed(seed: int, *keys: int) -> int:
    """
    Derive an independent 63-bit seed from a root seed and a path of integer keys.

    :param seed: the root seed
    :type seed: int
    :param keys: the integer path, e.g. (dimension, case index)
    :type keys: int

    :returns: the derived seed
    :rtype: int
    """
    ss = np.random.SeedSequence(entropy=seed, spawn_key=tuple(keys))
    return int(ss.generate_state(1, dtype=np.uint64)[0] >> np.uint64(1))


@contextmanager
def atomic_write(path: str, mode: str = "w", encoding: str = "utf-8") -> Iterator:
    """
    Open a temporary file next to ``path`` and rename it over ``path`` on success.
    Nothing is left behind when the block raises.

    :param path: the destination path
    :type path: str
    :param mode: the open mode, text or binary write
    :type mode: str
    :param encoding: the text encoding
    :type encoding: str
    """
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".part")
    try:
        kwargs = {} if "b" in mode else {"encoding": encoding, "newline": ""}
        with os.fdopen(fd, mode, **kwargs) as fp:
            yield fp
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise


class Stopwatch:
    """
    Accumulates wall-clock timings per named phase.
    """

    def __init__(self) -> None:
        self.timings: dict[str, float] = {}

    @contextmanager
    def phase(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            self.timings[name] = self.timings.get(name, 0.0) + (
                time.perf_counter() - start
            )
