import json
import os

import numpy as np

from .coefficients import CoefficientGroup
from .cohomology import TwoCocycle
from .exceptions import SchemaError
from .finite_group import FiniteGroup, GroupMap, build_group
from .gamma import GammaFunction
from .group_families import make_abelian
from .rota_baxter import RotaBaxterOperator
from .schemas import (
    BraceReportModel, CertificateModel, CocycleModel, GammaModel, GroupModel, LiftModel, ReportModel,
    RotaBaxterModel, validate_payload
)

# document kind read from a file without "kind", by the object the caller asked for
EXPECTED_KINDS = (
    (GammaFunction, 'gamma'),
    (RotaBaxterOperator, 'rota_baxter'),
    (GroupMap, 'lift'),
    (TwoCocycle, 'cocycle'),
    (FiniteGroup, 'group'),
)


def canonical_json(params):
    return json.dumps(params, sort_keys=True, separators=(',', ':'), ensure_ascii=True)


def group_to_params(group):
    return {
        'kind': 'group',
        'order': group.order,
        'identity': 0,
        'label': group.label,
        'table': group.table.tolist(),
        'names': None if group.names is None else list(group.names),
    }


def coefficients_to_params(coeff):
    if not coeff.elementary:
        raise ValueError('Coefficient group without an F_p basis has no file form', coeff.group.label)
    return {'group': group_to_params(coeff.group), 'basis': list(coeff.basis), 'prime': coeff.prime}


def object_to_params(obj):
    if isinstance(obj, FiniteGroup):
        return group_to_params(obj)
    if isinstance(obj, GammaFunction):
        return {'kind': 'gamma', 'group': group_to_params(obj.group), 'action': obj.action.tolist()}
    if isinstance(obj, RotaBaxterOperator):
        return {'kind': 'rota_baxter', 'group': group_to_params(obj.group), 'images': obj.images.tolist()}
    if isinstance(obj, GroupMap):
        return {'kind': 'lift', 'group': group_to_params(obj.source), 'images': obj.images.tolist()}
    if isinstance(obj, TwoCocycle):
        return {
            'kind': 'cocycle',
            'base': group_to_params(obj.base),
            'coeff': coefficients_to_params(obj.coeff),
            'values': obj.values.tolist(),
        }
    raise ValueError('Unsupported object type', type(obj).__name__)


def expected_kind(expected):
    if expected is None:
        return None
    for cls, kind in EXPECTED_KINDS:
        if issubclass(expected, cls):
            return kind
    return None


def _square_array(rows, order, pointer):
    if len(rows) != order:
        raise SchemaError(pointer, 'expected {} rows, got {}'.format(order, len(rows)))
    for r, row in enumerate(rows):
        if len(row) != order:
            raise SchemaError('{}/{}'.format(pointer, r), 'expected {} entries, got {}'.format(order, len(row)))
    return np.array(rows, dtype=np.int64).reshape(order, order)


def _group_from_model(model, pointer='', base_dir=None):
    if isinstance(model, str):
        group = load_object(os.path.join(base_dir or '', model), FiniteGroup)
        if not isinstance(group, FiniteGroup):
            raise SchemaError(pointer, '{} is not a group file'.format(model))
        return group
    order = len(model.table)
    if model.order is not None and model.order != order:
        raise SchemaError(pointer + '/order', 'table has {} rows, order says {}'.format(order, model.order))
    table = _square_array(model.table, order, pointer + '/table')
    if model.identity is not None:
        if model.identity >= order or not np.array_equal(table[model.identity], np.arange(order)):
            raise SchemaError(pointer + '/identity', 'element {} is not the identity of the table'.format(
                model.identity))
    return build_group(table, names=model.names, label=model.label)


def _coefficients_from_model(model, base_dir=None):
    if model.group is None:
        if not model.basis:
            return CoefficientGroup.trivial(model.prime)
        kernel = make_abelian([model.prime] * len(model.basis))
    else:
        kernel = _group_from_model(model.group, '/coeff/group', base_dir)
    coeff = CoefficientGroup.from_group(kernel, prime=model.prime)
    if list(coeff.basis) != model.basis:
        raise SchemaError('/coeff/basis', 'expected the basis {}'.format(list(coeff.basis)))
    return coeff


def _images(model, group, pointer):
    if len(model.images) != group.order:
        raise SchemaError(pointer, 'expected {} images, got {}'.format(group.order, len(model.images)))
    return model.images


def params_to_object(model, base_dir=None):
    """
    Library object for a validated model; certificates and reports stay as their models.
    Group references given as paths are resolved against base_dir.
    """
    if isinstance(model, GroupModel):
        return _group_from_model(model)
    if isinstance(model, GammaModel):
        group = _group_from_model(model.group, '/group', base_dir)
        return GammaFunction(group, _square_array(model.action, group.order, '/action'))
    if isinstance(model, LiftModel):
        group = _group_from_model(model.group, '/group', base_dir)
        return GroupMap(group, group, _images(model, group, '/images'))
    if isinstance(model, RotaBaxterModel):
        group = _group_from_model(model.group, '/group', base_dir)
        return RotaBaxterOperator(group, _images(model, group, '/images'))
    if isinstance(model, CocycleModel):
        base = _group_from_model(model.base, '/base', base_dir)
        coeff = _coefficients_from_model(model.coeff, base_dir)
        return TwoCocycle(base, coeff, _square_array(model.values, base.order, '/values'))
    if isinstance(model, (CertificateModel, BraceReportModel, ReportModel)):
        return model
    raise ValueError('Unsupported model type', type(model).__name__)


def load_params(path):
    try:
        with open(path, encoding='utf-8') as handle:
            return json.load(handle)
    except json.JSONDecodeError as error:
        raise SchemaError('', 'invalid JSON at line {} column {}'.format(error.lineno, error.colno))


def load_object(path, expected=None):
    """Object stored at path; a file without "kind" is read as the expected type when one is given."""
    model = validate_payload(load_params(path), expected_kind(expected))
    return params_to_object(model, os.path.dirname(os.path.abspath(path)))


def dump_object(obj):
    return (canonical_json(object_to_params(obj)) + '\n').encode('utf-8')
