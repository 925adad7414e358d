from pyellcop.testgen.schemas.case_spec import CaseSpec

__all__ = ["CaseSpec"]
