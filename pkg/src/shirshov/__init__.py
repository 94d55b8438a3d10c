"""Exact composition-based rewriting over free associative algebras,
dialgebras, free modules, and free anti-commutative algebras, with
completion, normal forms, and bounded verification oracles."""

from .anticomm import (AcPolynomial, ac_cmp, ac_compositions,
                       ac_gsb_check_bounded, ac_irr_words, ac_key, ac_mul,
                       ac_normal_form, hall_gsb, hall_words, is_ls_word,
                       ls_bracketing, ls_words, normal_words)
from .catalog import (Presentation, chinese_gsb, chinese_relations,
                      congruence_classes, is_staircase,
                      staircase_equals_irr, tensor_relations)
from .core import (Alphabet, DegLexOrder, Polynomial, Terms, VectorSpan,
                   deglex_key, word_cmp)
from .dialgebra import (DiPolynomial, Diword, LeibnizAlgebra, di_gsb_check_bounded,
                        di_irr, di_left, di_reduce, di_right, diword_cmp,
                        leibniz_check, leibniz_dim2, leibniz_enveloping,
                        pbw_basis)
from .freemodule import (ModuleElement, ModuleWord, act, module_cd_check,
                         module_compositions, module_is_gsb,
                         module_normal_form, mword_cmp)
from .gsb import (BudgetExceeded, cd_lemma_check, find_compositions,
                  inter_reduce, is_gsb, is_trivial, shirshov_complete)
from .rewrite import (RewriteSystem, ideal_span, irr_words,
                      membership_oracle, normal_form, reduce_step)

__version__ = "0.1.0"
