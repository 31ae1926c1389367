from .forms import Side, Block, AlternatingForm
from .rewriting import \
    side_of, \
    amalgam_power_of, \
    split_blocks, \
    normal_form, \
    is_trivial, \
    reduced_relator_form, \
    from_pairs

__all__ = (
    'Side',
    'Block',
    'AlternatingForm',

    'side_of',
    'amalgam_power_of',
    'split_blocks',
    'normal_form',
    'is_trivial',
    'reduced_relator_form',
    'from_pairs',
)
