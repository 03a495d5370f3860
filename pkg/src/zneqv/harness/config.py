# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import copy
import hashlib
import os

from pandapower.auxiliary import ADict

from zneqv.analysis.extrapolation import ORDER_RICHARDSON
from zneqv.constants import DEFAULT_LAMBDAS, LOCAL_INSTANCES, SHOTS_BASE, SHOTS_GLOBAL_FOLDED, \
    SHOTS_LOCAL_FOLDED, BOOTSTRAP_RESAMPLES, RECORD_FLUSH_INTERVAL, MAX_SIM_QUBITS, \
    MAX_SCALE_FACTOR
from zneqv.errors import ConfigError
from zneqv.io.file_io import dumps_canonical, from_json
from zneqv.scheduling.durations import DurationModel
from zneqv.sim.noise_model import NoiseModel

try:
    import pandaplan.core.pplog as logging
except ImportError:
    import logging

logger = logging.getLogger(__name__)

FOLDING_GLOBAL = "global"
FOLDING_LOCAL = "local"

default_options = {"n": 4, "num_circuits": 1000, "lambdas": list(DEFAULT_LAMBDAS),
                   "folding": FOLDING_GLOBAL, "local_instances": LOCAL_INSTANCES,
                   "shots": {"base": SHOTS_BASE, "global_folded": SHOTS_GLOBAL_FOLDED,
                             "local_folded": SHOTS_LOCAL_FOLDED},
                   "noise": {"p2": 0., "p1": None, "readout_flip": 0., "idle_z_rate": 0.},
                   "durations": {"x": 1., "sx": 1., "cx": 5., "measure": 15., "rz": 0.},
                   "dd_enabled": True, "coupling_map": "heavy_hex_27",
                   "layout": {"subgraph_class": 0, "embedding": 0},
                   "base_seed": 0, "fit_order": 1, "bootstrap_resamples": BOOTSTRAP_RESAMPLES,
                   "bootstrap_seed": None, "flush_interval": RECORD_FLUSH_INTERVAL,
                   "exact_hop": False}

_NESTED = ("shots", "noise", "durations")


class ExperimentConfig(ADict):
    """
    Validated experiment options. Build it with :func:`init_options` or :func:`load_config`.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)

    def noise_model(self):
        return NoiseModel.from_dict(self["noise"])

    def duration_model(self):
        return DurationModel.from_dict(self["durations"])

    def shots_for(self, scale_factor):
        if scale_factor == 1.:
            return self["shots"]["base"]
        key = "global_folded" if self["folding"] == FOLDING_GLOBAL else "local_folded"
        return self["shots"][key]

    def to_dict(self):
        return {k: copy.deepcopy(self[k]) for k in sorted(default_options)}

    def __repr__(self):  # pragma: no cover
        return "ExperimentConfig(n=%s, num_circuits=%s, folding=%s, lambdas=%s, hash=%s)" \
               % (self["n"], self["num_circuits"], self["folding"], self["lambdas"],
                  config_hash(self))


def _merge(base, layer):
    unknown = set(layer) - set(default_options)
    if unknown:
        logger.info("parameters %s are not in the list of standard options" % sorted(unknown))
    for k, v in layer.items():
        if k in _NESTED and isinstance(v, dict):
            base[k].update(v)
        else:
            base[k] = copy.deepcopy(v)


def _check(opts):
    n = opts["n"]
    if not isinstance(n, int) or not 2 <= n <= MAX_SIM_QUBITS:
        raise ConfigError("n must be an integer in [2, %d], got %s" % (MAX_SIM_QUBITS, n))
    if int(opts["num_circuits"]) < 1:
        raise ConfigError("num_circuits must be at least 1, got %s" % opts["num_circuits"])
    lambdas = sorted(set(float(v) for v in opts["lambdas"]))
    if 1. not in lambdas:
        raise ConfigError("lambdas must contain 1, got %s" % opts["lambdas"])
    if lambdas[0] < 1. or lambdas[-1] > MAX_SCALE_FACTOR:
        raise ConfigError("lambdas must lie in [1, %g], got %s" % (MAX_SCALE_FACTOR, lambdas))
    opts["lambdas"] = lambdas
    if opts["folding"] not in (FOLDING_GLOBAL, FOLDING_LOCAL):
        raise ConfigError("folding must be '%s' or '%s', got %s"
                          % (FOLDING_GLOBAL, FOLDING_LOCAL, opts["folding"]))
    for key, value in list(opts["shots"].items()) + [("local_instances",
                                                       opts["local_instances"])]:
        if int(value) < 1:
            raise ConfigError("%s must be positive, got %s" % (key, value))
    order = opts["fit_order"]
    if order != ORDER_RICHARDSON:
        if int(order) < 1:
            raise ConfigError("fit_order must be >= 1 or '%s', got %s" % (ORDER_RICHARDSON, order))
        if len(lambdas) < int(order) + 1:
            raise ConfigError("A degree %s fit needs at least %d scale factors, got %s"
                              % (order, int(order) + 1, lambdas))
    elif len(lambdas) < 2:
        raise ConfigError("Extrapolation needs at least two scale factors, got %s" % lambdas)
    layout = opts["layout"]
    if "mapping" in layout:
        if len(layout["mapping"]) != n:
            raise ConfigError("Layout mapping %s does not place %d qubits"
                              % (layout["mapping"], n))
    elif not {"subgraph_class", "embedding"} <= set(layout):
        raise ConfigError("layout needs 'mapping' or 'subgraph_class' and 'embedding', got %s"
                          % layout)
    for key in ("bootstrap_resamples", "flush_interval"):
        if int(opts[key]) < 1:
            raise ConfigError("%s must be positive, got %s" % (key, opts[key]))
    if opts["bootstrap_seed"] is None:
        opts["bootstrap_seed"] = opts["base_seed"]
    # constructing the models validates them
    NoiseModel.from_dict(opts["noise"])
    DurationModel.from_dict(opts["durations"])
    return opts


def init_options(config=None, **kwargs):
    """
    Builds an experiment configuration. The base layer consists of the default options, it is
    overwritten by the given config dict and finally by keyword arguments. Nested ``shots``,
    ``noise`` and ``durations`` dicts are merged key by key, ``layout`` is replaced as a whole.

    Those are the options that can be set and their default values:

        - **n** (int): 4 - QV circuit width (2 to 10)

        - **num_circuits** (int): 1000 - number of random QV circuits

        - **lambdas** (list): [1, 1.2, 1.5, 1.8, 2] - noise scale factors, must contain 1

        - **folding** (str): "global" - "global" or "local" (random CX) folding

        - **local_instances** (int): 10 - random instances per scale factor for local folding

        - **shots** (dict): {"base": 10000, "global_folded": 1000, "local_folded": 100}

        - **noise** (dict): {"p2": 0, "p1": None, "readout_flip": 0, "idle_z_rate": 0} - see \
                NoiseModel; p1 None means p2 / 10

        - **durations** (dict): {"x": 1, "sx": 1, "cx": 5, "measure": 15, "rz": 0}

        - **dd_enabled** (bool): True - X-X dynamical decoupling of idle windows

        - **coupling_map** (str): "heavy_hex_27" - bundled map name ("heavy_hex_27", "line", \
                "full") or path to a coupling JSON file

        - **layout** (dict): {"subgraph_class": 0, "embedding": 0} - or {"mapping": [...]}

        - **base_seed** (int): 0 - circuit i uses seed base_seed + i

        - **fit_order** (int or str): 1 - polynomial degree or "richardson"

        - **bootstrap_resamples** (int): 100

        - **bootstrap_seed** (int): None - defaults to base_seed

        - **flush_interval** (int): 250 - records buffered before the log is written

        - **exact_hop** (bool): False - also record the exact heavy mass per scale factor

    :param config: options to layer over the defaults
    :type config: dict, default None
    :param kwargs: options overriding config
    :return: the validated configuration
    :rtype: ExperimentConfig

    :Example:
        >>> cfg = init_options({"n": 6}, num_circuits=200)
        >>> cfg.shots_for(1.2)
        1000
    """
    opts = copy.deepcopy(default_options)
    _merge(opts, dict(config or {}))
    _merge(opts, kwargs)
    return ExperimentConfig(_check(opts))


def load_config(filename, **kwargs):
    """
    Reads a JSON config file and layers keyword overrides on top.
    """
    return init_options(from_json(filename), **kwargs)


def get_option(config, option_name):
    """
    Returns the requested option. Raises a UserWarning if the option was not found.
    """
    try:
        return config[option_name]
    except KeyError:
        raise UserWarning("The option %s is not part of the experiment config." % option_name)


def get_options(config, *option_names):
    return (get_option(config, option) for option in list(option_names))


def config_hash(config):
    """
    First 12 hex digits of the SHA-256 of the canonical config JSON.
    """
    opts = config.to_dict() if hasattr(config, "to_dict") else dict(config)
    return hashlib.sha256(dumps_canonical(opts).encode("utf-8")).hexdigest()[:12]


def run_directory(config, out_root):
    return os.path.join(out_root, config_hash(config))
