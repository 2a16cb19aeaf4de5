import setuptools

with open("README.rst", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="thetaforms",
    version="1.0.0",
    author="The thetaforms developers",
    description="Exact theta series of ternary quadratic forms and verification of q-series identities",
    long_description=long_description,
    long_description_content_type="text/x-rst",
    packages=setuptools.find_packages(exclude=['tests']),
    classifiers=[
        "Topic :: Scientific/Engineering",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Intended Audience :: Education",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3 :: Only",
        "License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)",
        "Operating System :: OS Independent",
    ],
    keywords="ternary quadratic forms, theta series, q-series, representation numbers",
    install_requires=[
		'pytest>=6.0.0',
        'numpy>=1.17',
        'sympy>=1.5'
    ],
    entry_points={
        "console_scripts" : [
            "thetaforms = thetaforms._cli:main"
        ]
    },
    python_requires='>=3.8',
)
