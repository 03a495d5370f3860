# Copyright (c) 2024 by the zneqv developers. All rights reserved.
# Use of this source code is governed by a BSD-style license that can be found in the LICENSE file.

import json
import os

import numpy as np

from pandapower.io_utils import PPJSONEncoder

from zneqv.circuit.qasm import qasm_export, qasm_import


def _plain(obj):
    """
    Nested dicts and lists of builtin scalars; tuples become lists, numpy scalars and arrays
    become Python values.
    """
    if hasattr(obj, "to_dict"):
        obj = obj.to_dict()
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, np.generic):
        return obj.item()
    return obj


def dumps_canonical(obj, indent=2):
    """
    JSON text with sorted keys, so equal content always gives identical bytes.
    """
    return json.dumps(_plain(obj), cls=PPJSONEncoder, indent=indent, sort_keys=True)


def to_json(obj, filename=None):
    """
    Saves a dict or any object with a ``to_dict`` method as canonical JSON.

    :param obj: content to save
    :type obj: dict, object
    :param filename: The absolute or relative path to the output file or a writable file-like \
            object. If None, a JSON string is returned.
    :type filename: str, file-object, default None
    :return: JSON string (only if filename is None)

    :Example:
        >>> zneqv.to_json(NoiseModel(p2=0.01), "noise.json")
    """
    json_string = dumps_canonical(obj)
    if filename is None:
        return json_string
    if hasattr(filename, 'write'):
        filename.write(json_string)
    else:
        with open(filename, "w") as fp:
            fp.write(json_string)


def from_json(filename):
    """
    Loads a JSON document from a path or file-like object.
    """
    if hasattr(filename, 'read'):
        return json.loads(filename.read())
    if not os.path.isfile(filename):
        raise UserWarning("File {} does not exist!!".format(filename))
    with open(filename) as fp:
        return json.load(fp)


def append_jsonl(items, filename):
    """
    Appends one compact JSON line per item and returns the number of lines written.
    """
    lines = [json.dumps(_plain(item), cls=PPJSONEncoder, sort_keys=True) for item in items]
    if not lines:
        return 0
    text = "\n".join(lines) + "\n"
    if hasattr(filename, 'write'):
        filename.write(text)
    else:
        with open(filename, "a") as fp:
            fp.write(text)
    return len(lines)


def read_jsonl(filename):
    """
    Reads a JSON-lines file. A truncated last line (interrupted writer) is dropped.
    """
    if hasattr(filename, 'read'):
        text = filename.read()
    elif not os.path.isfile(filename):
        raise UserWarning("File {} does not exist!!".format(filename))
    else:
        with open(filename) as fp:
            text = fp.read()
    lines = [ln for ln in text.splitlines() if ln.strip()]
    items = []
    for i, ln in enumerate(lines):
        try:
            items.append(json.loads(ln))
        except json.JSONDecodeError:
            if i == len(lines) - 1 and not text.endswith("\n"):
                break
            raise
    return items


def to_qasm(circuit, filename=None):
    """
    Writes a native circuit as OpenQASM 2.0.

    :param circuit: native circuit
    :type circuit: Circuit
    :param filename: output path or writable file-like object; None returns the text
    :type filename: str, file-object, default None
    """
    text = qasm_export(circuit)
    if filename is None:
        return text
    if hasattr(filename, 'write'):
        filename.write(text)
    else:
        with open(filename, "w") as fp:
            fp.write(text)


def from_qasm(filename):
    if hasattr(filename, 'read'):
        return qasm_import(filename.read())
    if not os.path.isfile(filename):
        raise UserWarning("File {} does not exist!!".format(filename))
    with open(filename) as fp:
        return qasm_import(fp.read())
