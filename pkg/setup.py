from setuptools import find_packages, setup

setup(
    name='blockpeek',
    version='1.0.0',
    description="Jeu à somme nulle de blocage-observation sur un lien mmWave à 60 GHz",
    packages=find_packages(include=['src', 'src.*']),
    py_modules=['main'],
    python_requires='>=3.8',
    install_requires=[
        'numpy>=1.24.0',
        'colorama>=0.4.6',
        'matplotlib>=3.5.0',
    ],
    extras_require={
        'dev': [
            'scipy>=1.10.0',
            'pytest>=7.0.0',
            'pytest-cov>=4.1.0',
            'black>=23.0.0',
            'flake8>=6.0.0',
            'pylint>=3.0.0',
        ],
    },
    entry_points={
        'console_scripts': ['blockpeek=main:main'],
    },
)
