from .builtins import BUILTIN_RINGS, builtin_ring, parse_builtin
from .parser import parse_polynomial, parse_rows
from .payloads import degree_list_from_payload, dm_from_payload, e_module_from_payload, module_from_payload
from .render import render, render_complex, render_matrix
from .serialize import dump, load, ring_from_json, to_json
