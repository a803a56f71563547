# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2026 The pinchsec authors
"""Dual-waveguide pinching-antenna secrecy simulation."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401


def configure(experiment, **settings):
    """Default config for `experiment` with flat config-file style overrides."""
    if isinstance(experiment, str):
        experiment = parse_experiment(experiment)  # noqa: F405
    cfg = default_config(experiment)  # noqa: F405
    for key, value in settings.items():
        if isinstance(value, (list, tuple)):
            value = ",".join(str(v) for v in value)
        elif isinstance(value, bool):
            value = "true" if value else "false"
        cfg.set(key, str(value))
    return cfg
