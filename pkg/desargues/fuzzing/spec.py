#
# This file is subject to the terms and conditions defined in the
# file 'LICENSE', which is part of this source code package.
#
# Fuzz run specification and its JSON schema validation.
#
import json
import logging
import os
from dataclasses import dataclass, asdict
from json import JSONDecodeError

from jsonschema import validate, ValidationError

from desargues import translate_gettext as _
from desargues.exceptions import FuzzSpecError
from desargues.system_utils import package_path

_logger = logging.getLogger('desargues')

THEOREM_NAMES = ('desargues', 'reciprocal', 'menelaus', 'newton-gauss', 'problem1', 'problem2')
DEFAULT_BOUND = 10
DEFAULT_SEED = 0


@dataclass(frozen=True)
class FuzzSpec:
    theorem: str
    trials: int
    seed: int = DEFAULT_SEED
    bound: int = DEFAULT_BOUND

    def to_config(self) -> dict:
        """ The spec as a 'fuzz-spec' resource document. """
        config = {'schemaVersion': 1.0, 'resourceType': 'fuzz-spec'}
        config.update(asdict(self))
        return config


def load_config_schema(schema_file):
    """
    Load the requested schema file from the package schema directory.
    :param schema_file: Schema file name only, no path included.
    :return: schema dict or None.
    """
    schema_path = package_path('schemas', schema_file)
    if not os.path.exists(schema_path):
        _logger.error(_('Unable to locate schema file') + f' {schema_file}.')
        return None

    with open(schema_path) as h:
        return json.loads(h.read())


def validate_config(config, schema_file):
    """
    Validate a configuration dict against a schema file.
    :param config: dict
    :param schema_file: schema file name.
    :return: True if valid otherwise False.
    """
    schema = load_config_schema(schema_file)
    if not schema:
        return False

    try:
        validate(config, schema)
    except ValidationError as e:
        _logger.error(_('Configuration did not validate against config schema.'))
        _logger.error(e.message)
        return False

    return True


def validate_config_base(config_file, resource_types):
    """
    Validate a configuration file against the base schema.
    :param config_file: Absolute path to configuration json file.
    :param resource_types: list of strings representing valid 'resourceType' values.
    :return: config dict or None.
    """
    # Read the base schema, all json configs must validate against this schema.
    base_schema = load_config_schema('base.schema')
    if not base_schema:
        return None

    try:
        with open(config_file) as h:
            config = json.loads(h.read())
    except JSONDecodeError:
        _logger.error(_('Configuration file is not valid JSON.'))
        return None

    try:
        validate(config, base_schema)
    except ValidationError as e:
        _logger.error(_('Configuration file did not validate against the base schema.') + f'\n{e.message}')
        return None

    if config['resourceType'] not in resource_types:
        valid_types = ",".join(resource_types)
        _logger.error(_('Resource type does not match accepted types') + f' ({valid_types}).')
        return None

    return config


def validate_fuzz_spec(spec: FuzzSpec) -> FuzzSpec:
    """
    Check a spec against 'fuzz-spec.schema'.
    :raises FuzzSpecError: naming the first offending field.
    """
    schema = load_config_schema('fuzz-spec.schema')
    if not schema:
        raise FuzzSpecError('schema', _('fuzz-spec schema is missing.'))
    try:
        validate(spec.to_config(), schema)
    except ValidationError as e:
        field = '.'.join(str(p) for p in e.absolute_path) or 'spec'
        raise FuzzSpecError(field, e.message)
    return spec
