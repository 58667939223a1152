import json
import os
import pathlib
import subprocess

import pytest
from jsonschema import Draft202012Validator
from referencing import Registry, Resource


BIN = os.environ.get("DOMLAB_BIN", "domlab")
SCHEMA_DIR = pathlib.Path(os.environ.get("DOMLAB_SCHEMA_DIR", pathlib.Path(__file__).parents[2] / "docs" / "schema"))


def _registry():
    resources = []
    for path in SCHEMA_DIR.glob("*.json"):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], Resource.from_contents(doc)))
    return Registry().with_resources(resources)


REGISTRY = _registry()


def validator(name):
    doc = json.loads((SCHEMA_DIR / f"{name}.schema.json").read_text())
    return Draft202012Validator(doc, registry=REGISTRY)


class Run:
    def __init__(self, proc):
        self.code = proc.returncode
        self.out = proc.stdout
        self.err = proc.stderr

    def json(self):
        return json.loads(self.out)


@pytest.fixture
def domlab():
    def run(*args, env=None):
        full_env = dict(os.environ)
        full_env.pop("DOMLAB_MEMO_CAP", None)
        full_env.update(env or {})
        proc = subprocess.run([BIN, *args], capture_output=True, text=True, env=full_env, timeout=300)
        return Run(proc)

    return run
