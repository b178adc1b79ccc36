from .generators import TREFOIL_CODE, Family, GeneratorSpec, basis, generator_diagram, generator_graph
from .decompose import decompose, realize, realize_graph
