from setuptools import setup, find_packages

setup(
    name='pypolyrank',
    version='0.1.0',
    packages=find_packages(exclude=['tests', 'examples', 'examples.*']),
    install_requires=[
        'numpy>=1.26.4',
        'scipy>=1.13.1',
        'pandas>=2.2.2',
        'python-dotenv>=1.0.1',
    ],
    entry_points={
        'console_scripts': ['polyrank=harness.cli:main'],
    },
    description="""Generic complete eigenstructures of m x n matrix polynomials of grade d and rank at most r.
    Enumerates the rd + 1 generic families, realizes each one as a concrete polynomial, computes complete
    eigenstructures numerically and checks the genericity and codimension claims by randomized experiment.""",
    author='Cephas Soga',
    author_email='sogacephas@gmail.com',
    classifiers=[
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
    ],
    python_requires='>=3.12',
)
