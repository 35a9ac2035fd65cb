# Generated by Django 4.2.7 on 2026-10-17 10:05

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='SweepRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('name', models.CharField(blank=True, max_length=50)),
                ('scenario', models.CharField(max_length=200)),
                ('mode', models.CharField(choices=[('exhaustive', 'Exhaustivo'), ('sampled', 'Muestreado'), ('structured', 'Estructurado'), ('trials', 'Ensayos'), ('fixture', 'Tabla de referencia')], max_length=20)),
                ('distribution', models.CharField(blank=True, max_length=20)),
                ('seed', models.BigIntegerField(blank=True, null=True)),
                ('models_checked', models.BigIntegerField(default=0)),
                ('mismatch_count', models.BigIntegerField(default=0)),
                ('mismatches', models.JSONField(blank=True, default=list)),
                ('notes', models.JSONField(blank=True, default=list)),
                ('elapsed', models.FloatField(default=0.0)),
                ('passed', models.BooleanField(default=True)),
                ('created_at', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'ordering': ['-created_at'],
            },
        ),
    ]
