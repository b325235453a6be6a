"""This script demonstrates how the kernel of the first BGG operator grows with the
degree cutoff D until it reaches dim W, for the standard conformal module in
dimension 3 and the standard projective module in dimension 2. It also exports D_0."""

from pathlib import Path

from flatbgg import BGGContext
from flatbgg.bgg import kernel_stabilization, twistor_kernel
from flatbgg.exporters import MatrixExporter, SectionExporter
from flatbgg.flat_model import Section

data_dir = Path.home() / "flatbgg_demos"
data_dir.mkdir(exist_ok=True)

for algebra_name in ["conformal:3,0", "projective:2"]:
    context = BGGContext.from_names(algebra_name, "standard", max_degree=3)
    D0 = context.bgg_operator(0)
    print(f"{context.name}: D_0 has order {D0.order}")
    for D in range(4):
        print(f"    D = {D}: dim ker D_0 = {twistor_kernel(context, D).dim}")
    print(f"    stable from D = {kernel_stabilization(context, 3)}")
    name = algebra_name.replace(":", "_").replace(",", "_")
    MatrixExporter().export(context.bgg_matrix(0), data_dir / f"D_0_{name}.csv")

    # the kernel basis as sections
    kernel = twistor_kernel(context)
    for i, vector in enumerate(kernel.vectors):
        section = Section.from_vector(kernel.ambient, vector)
        SectionExporter().export(section, data_dir / f"kernel_{name}_{i}.csv")
