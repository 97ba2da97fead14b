from setuptools import setup

setup(
 name="fanotoric",
 version="0.1.0",
 description="Fano schemes of planes on complete intersections in toric varieties",
 long_description="Cayley structures, restriction degrees, expected dimensions and plane counts for Fano schemes of general complete intersections in projective toric varieties.",
 author="The fanotoric developers",
 license="MIT",
 classifiers=[
  "Development Status :: 3 - Alpha",
  "Intended Audience :: Science/Research",
  "License :: OSI Approved :: MIT License",
  "Topic :: Scientific/Engineering :: Mathematics",
  "Programming Language :: Python :: 3",
  "Programming Language :: Python :: 3.8",
  "Programming Language :: Python :: 3.9",
  "Programming Language :: Python :: 3.10",
  "Programming Language :: Python :: 3.11",
 ],
 keywords="toric varieties fano schemes enumerative geometry",
 packages=["fanotoric"],
 python_requires=">=3.8",
 install_requires=["sympy>=1.11", "numpy", "numerus", "pycddlib>=2.1,<3"],
 entry_points={"console_scripts": ["fano-toric=fanotoric.cli:main"]}
)
