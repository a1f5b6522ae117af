import json

import numpy as np
import pytest

from braceforge.coefficients import CoefficientGroup
from braceforge.cohomology import TwoCocycle
from braceforge.exceptions import NotAssociativeError, SchemaError
from braceforge.finite_group import FiniteGroup, GroupMap, power_map
from braceforge.gamma import GammaFunction
from braceforge.group_families import make_abelian
from braceforge.rota_baxter import RotaBaxterOperator
from braceforge.schemas import CertificateModel, json_pointer, validate_payload
from braceforge.utils import canonical_json, dump_object, load_object, object_to_params


def _write(tmp_path, name, params):
    path = tmp_path / name
    path.write_text(json.dumps(params), encoding='utf-8')
    return str(path)


def test_canonical_json_is_sorted_and_compact():
    assert canonical_json({'b': [1, 2], 'a': None}) == '{"a":null,"b":[1,2]}'


def test_group_round_trip(tmp_path, heisenberg3):
    path = tmp_path / 'h3.json'
    path.write_bytes(dump_object(heisenberg3))

    loaded = load_object(str(path))

    assert isinstance(loaded, FiniteGroup)
    assert np.array_equal(loaded.table, heisenberg3.table)
    assert loaded.names == heisenberg3.names
    assert dump_object(loaded) == path.read_bytes()


def test_typed_objects_round_trip(tmp_path, s3):
    inverse = power_map(s3, -1)
    objects = [
        GammaFunction(s3, np.tile(np.arange(6), (6, 1))),
        GroupMap(s3, s3, inverse.images),
        RotaBaxterOperator(s3, inverse.images),
    ]

    for index, obj in enumerate(objects):
        path = tmp_path / 'object{}.json'.format(index)
        path.write_bytes(dump_object(obj))
        loaded = load_object(str(path))

        assert type(loaded) is type(obj)
        assert object_to_params(loaded) == object_to_params(obj)


def test_cocycle_round_trip(tmp_path, alpha_instances):
    kappa = alpha_instances[1].kappa
    path = tmp_path / 'kappa.json'
    path.write_bytes(dump_object(kappa))

    loaded = load_object(str(path))

    assert isinstance(loaded, TwoCocycle)
    assert np.array_equal(loaded.values, kappa.values)
    assert np.array_equal(loaded.base.table, kappa.base.table)
    assert loaded.coeff.basis == kappa.coeff.basis


def test_cocycle_basis_must_be_the_canonical_one(tmp_path, alpha_instances):
    params = object_to_params(alpha_instances[1].kappa)
    params['coeff']['basis'] = [2]

    with pytest.raises(SchemaError) as error:
        load_object(_write(tmp_path, 'kappa.json', params))

    assert error.value.pointer == '/coeff/basis'


def test_non_associative_table_names_the_triple(tmp_path, loop5):
    with pytest.raises(NotAssociativeError) as error:
        load_object(_write(tmp_path, 'loop.json', {'kind': 'group', 'table': loop5}))

    assert len(error.value.triple) == 3


def test_missing_field_points_at_it():
    with pytest.raises(SchemaError) as error:
        validate_payload({'kind': 'group'})

    assert error.value.pointer == '/table'


def test_nested_type_error_points_into_the_document():
    with pytest.raises(SchemaError) as error:
        validate_payload({'kind': 'lift', 'group': {'table': [[0]]}, 'images': ['x']})

    assert error.value.pointer == '/images/0'


@pytest.mark.parametrize('payload', [
    {'kind': 'group', 'table': [[0]], 'colour': 'red'},
    {'kind': 'monoid', 'table': [[0]]},
    {'colour': 'red'},
    [1, 2, 3],
])
def test_malformed_payloads_are_rejected(payload):
    with pytest.raises(SchemaError):
        validate_payload(payload)


def test_ragged_table_is_a_schema_error(tmp_path):
    with pytest.raises(SchemaError) as error:
        load_object(_write(tmp_path, 'ragged.json', {'kind': 'group', 'table': [[0, 1], [1]]}))

    assert error.value.pointer == '/table/1'


def test_image_count_is_checked(tmp_path, s3):
    params = object_to_params(RotaBaxterOperator(s3, np.zeros(6, dtype=int)))
    params['images'] = [0, 0]

    with pytest.raises(SchemaError) as error:
        load_object(_write(tmp_path, 'rb.json', params))

    assert error.value.pointer == '/images'


def test_invalid_json_is_a_schema_error(tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text('{"kind": "group", ', encoding='utf-8')

    with pytest.raises(SchemaError):
        load_object(str(path))


def test_certificates_load_as_models(tmp_path):
    params = {'kind': 'certificate', 'trivial': False, 'method': 'spanning_tree', 'unknowns': 6}

    loaded = load_object(_write(tmp_path, 'certificate.json', params))

    assert isinstance(loaded, CertificateModel)
    assert loaded.trivial is False


def test_json_pointer_escapes():
    assert json_pointer(['a/b', 'c~d', 0]) == '/a~1b/c~0d/0'


def test_published_group_shape_needs_no_kind(tmp_path, s3):
    params = {'order': 6, 'identity': 0, 'table': s3.table.tolist()}

    loaded = load_object(_write(tmp_path, 's3.json', params))

    assert isinstance(loaded, FiniteGroup)
    assert np.array_equal(loaded.table, s3.table)
    written = json.loads(dump_object(loaded))
    assert written['order'] == 6
    assert written['identity'] == 0


@pytest.mark.parametrize('field, value', [('order', 5), ('identity', 2)])
def test_order_and_identity_must_describe_the_table(tmp_path, s3, field, value):
    params = dict(object_to_params(s3), **{field: value})

    with pytest.raises(SchemaError) as error:
        load_object(_write(tmp_path, 's3.json', params))

    assert error.value.pointer == '/' + field


def test_kind_is_taken_from_the_requested_type(tmp_path, s3):
    inverse = power_map(s3, -1).images.tolist()
    path = _write(tmp_path, 'map.json', {'group': {'table': s3.table.tolist()}, 'images': inverse})

    assert type(load_object(path)) is RotaBaxterOperator
    assert type(load_object(path, GroupMap)) is GroupMap
    assert type(load_object(path, RotaBaxterOperator)) is RotaBaxterOperator


def test_group_may_be_a_path_next_to_the_file(tmp_path, s3):
    (tmp_path / 'groups').mkdir()
    (tmp_path / 'groups' / 's3.json').write_bytes(dump_object(s3))
    action = np.tile(np.arange(6), (6, 1)).tolist()

    gamma = load_object(_write(tmp_path, 'gamma.json', {'group': 'groups/s3.json', 'action': action}))

    assert isinstance(gamma, GammaFunction)
    assert gamma.group == s3


def test_group_reference_must_be_a_group_file(tmp_path, s3):
    not_a_group = _write(tmp_path, 'rb.json', object_to_params(RotaBaxterOperator(s3, np.zeros(6, dtype=int))))

    with pytest.raises(SchemaError) as error:
        load_object(_write(tmp_path, 'gamma.json', {'group': not_a_group, 'action': [[0]]}))

    assert error.value.pointer == '/group'


def test_cocycle_coefficients_default_to_the_elementary_group(tmp_path, alpha_instances):
    kappa = alpha_instances[1].kappa
    params = object_to_params(kappa)
    del params['kind']
    del params['coeff']['group']

    loaded = load_object(_write(tmp_path, 'kappa.json', params), TwoCocycle)

    assert loaded.coeff.order == 3
    assert np.array_equal(loaded.values, kappa.values)


def test_general_coefficients_have_no_file_form():
    c4 = make_abelian([4])
    cocycle = TwoCocycle(c4, CoefficientGroup.general(c4), np.zeros((4, 4), dtype=int))

    with pytest.raises(ValueError):
        object_to_params(cocycle)


def test_error_inside_an_inline_group_points_at_it():
    with pytest.raises(SchemaError) as error:
        validate_payload({'kind': 'gamma', 'group': {'order': 1}, 'action': [[0]]})

    assert error.value.pointer == '/group/table'
