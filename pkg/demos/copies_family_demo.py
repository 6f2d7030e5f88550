"""
An open orbit does not bound the modality
=========================================

"""

# stacking d copies of the natural module of the rank n-1 special linear
# algebra (d < n) gives an action with a dense open orbit, so the generic
# sheet has modality 0; yet the tuples (v, c*v, ...) of proportional
# vectors form a family of small equal-dimension orbits whose parameter
# count forces total modality >= d-1
from liemod.modality import sum_of_copies_check

report = sum_of_copies_check(3, 2)
print(f"two copies of the 3-dimensional natural module "
      f"(space dim {report.space_dim})")
print(f"  open orbit found: {report.open_orbit_found}")
print(f"  regular-sheet modality: {report.regular_sheet_modality}")
print(f"  proportional family: dim {report.family_dim}, orbits of dim "
      f"{report.family_orbit_dim}, lower bound "
      f"{report.family_lower_bound}")
print(f"  modality-regular: {report.modality_regular}")

# the same anatomy at the next size up
report = sum_of_copies_check(4, 3)
print(f"\nthree copies of the 4-dimensional natural module: regular sheet "
      f"{report.regular_sheet_modality}, family bound "
      f"{report.family_lower_bound}, modality-regular "
      f"{report.modality_regular}")
